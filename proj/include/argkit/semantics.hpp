#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "argkit/framework.hpp"

namespace argkit {

enum class SemanticsId { CF, NAIVE, ADM, STB, COM, GRD, PRF, STG, SEM };

std::string to_string(SemanticsId s);
SemanticsId semantics_from_string(std::string_view s);
const std::vector<SemanticsId>& all_semantics();

struct EnumerationOptions {
    // Extension enumeration is exponential; refuse frameworks larger than
    // this. GRD is polynomial and exempt. Hard kernel cap is 64.
    int max_args = 24;
};

// Extensions in canonical order: sets compared as bit patterns with argument
// 0 in the least significant position.
class ExtensionSet {
public:
    ExtensionSet() = default;
    explicit ExtensionSet(std::vector<ArgSet> sets);

    int size() const { return static_cast<int>(sets_.size()); }
    bool empty() const { return sets_.empty(); }
    const ArgSet& operator[](int i) const { return sets_[static_cast<std::size_t>(i)]; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }
    bool contains(const ArgSet& s) const;

private:
    std::vector<ArgSet> sets_;
};

ExtensionSet extensions(const Framework& f, SemanticsId sigma,
                        const EnumerationOptions& opts = {});

// Least fixpoint of the characteristic function. No size limit.
ArgSet grounded(const Framework& f);

// Membership in some / every sigma-extension. Skeptical acceptance is
// vacuously true when there are no extensions.
bool credulous(const Framework& f, SemanticsId sigma, std::string_view arg,
               const EnumerationOptions& opts = {});
bool skeptical(const Framework& f, SemanticsId sigma, std::string_view arg,
               const EnumerationOptions& opts = {});

} // namespace argkit
