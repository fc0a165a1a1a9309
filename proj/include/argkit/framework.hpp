#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argkit/errors.hpp"

namespace argkit {

class Framework;

// Subset of a framework's arguments, stored as a bit vector. Argument 0 is the
// least significant bit of word 0. Sets remember which framework they belong
// to; mixing sets from different frameworks throws UsageError.
class ArgSet {
public:
    ArgSet() = default;
    ArgSet(int n, std::uint64_t tag);

    int size() const { return n_; }
    std::uint64_t tag() const { return tag_; }

    bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v = true);
    int count() const;
    bool empty() const;

    ArgSet& operator|=(const ArgSet& o);
    ArgSet& operator&=(const ArgSet& o);
    ArgSet& subtract(const ArgSet& o);

    bool is_subset_of(const ArgSet& o) const;
    bool intersects(const ArgSet& o) const;

    bool operator==(const ArgSet& o) const { return n_ == o.n_ && tag_ == o.tag_ && w_ == o.w_; }
    bool operator!=(const ArgSet& o) const { return !(*this == o); }

    // Canonical set order: compare the bit patterns as one big unsigned number
    // (highest word first). With argument 0 in the low bit, {} < {a0} < {a1} <
    // {a0,a1} < {a2} < ...
    static bool mask_less(const ArgSet& a, const ArgSet& b);

    std::vector<int> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

private:
    void align(const ArgSet& o) const;

    int n_ = 0;
    std::uint64_t tag_ = 0;
    std::vector<std::uint64_t> w_;
};

// Immutable argumentation framework: named arguments plus a directed attack
// relation. Construction sorts and dedupes the attack list, so two frameworks
// built from the same data compare structurally equal attack-wise.
class Framework {
public:
    Framework(std::vector<std::string> arguments,
              std::vector<std::pair<std::string, std::string>> attacks);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    // -1 when absent.
    int index_of(std::string_view name) const;
    int require_index(std::string_view name) const;

    const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
    bool has_attack(int from, int to) const;

    const ArgSet& attacked_by(int i) const { return fwd_[static_cast<std::size_t>(i)]; }
    const ArgSet& attackers_of(int i) const { return rev_[static_cast<std::size_t>(i)]; }

    std::uint64_t id() const { return id_; }

    ArgSet empty_set() const { return ArgSet(size(), id_); }
    ArgSet full_set() const;
    ArgSet set_of(const std::vector<std::string>& names) const;
    void check_set(const ArgSet& s) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<std::pair<int, int>> attacks_;
    std::vector<ArgSet> fwd_;
    std::vector<ArgSet> rev_;
    std::uint64_t id_;
};

// Structural equality: same argument names in the same order, same attacks.
inline bool operator==(const Framework& a, const Framework& b) {
    return a.names() == b.names() && a.attacks() == b.attacks();
}

// S together with everything S attacks.
ArgSet range(const Framework& f, const ArgSet& s);

bool is_conflict_free(const Framework& f, const ArgSet& s);

// Every attacker of `arg` is attacked by some member of s.
bool defends(const Framework& f, const ArgSet& s, int arg);
bool defends(const Framework& f, const ArgSet& s, std::string_view arg);

// All arguments defended by s.
ArgSet characteristic(const Framework& f, const ArgSet& s);

// Framework on the arguments outside `removed`, keeping their relative order
// and all attacks among them.
Framework induced_subframework(const Framework& f, const ArgSet& removed);

} // namespace argkit
