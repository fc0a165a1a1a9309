#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "argkit/errors.hpp"

namespace argkit {

struct Literal {
    std::string variable;
    bool negated = false;
};

// CNF over named variables. Clause order is preserved (consumers address
// clauses by index); literals inside a clause are sorted and deduped.
// Tautological clauses (x and ~x together) and empty clauses are rejected.
class CnfFormula {
public:
    struct Lit {
        int var;
        bool negated;
        bool operator==(const Lit&) const = default;
        auto operator<=>(const Lit&) const = default;
    };
    using Clause = std::vector<Lit>;

    CnfFormula() = default;
    CnfFormula(std::vector<std::string> variables,
               const std::vector<std::vector<Literal>>& clauses);

    int num_vars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    int var_index(std::string_view name) const;
    int require_var(std::string_view name) const;

    int num_clauses() const { return static_cast<int>(clauses_.size()); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    // Variable i corresponds to bit i.
    bool is_model_mask(std::uint64_t m) const;
    bool is_model(const std::vector<std::string>& true_vars) const;

private:
    std::vector<std::string> vars_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<Clause> clauses_;
};

struct MonotoneSplit {
    bool monotone = false;
    std::vector<int> positive; // indices of all-positive clauses
    std::vector<int> negative; // indices of all-negative clauses
};

MonotoneSplit split_monotone(const CnfFormula& f);
bool is_monotone(const CnfFormula& f);

// Brute-force model enumeration, ascending mask order. Requires <= 20
// variables (CapacityError beyond that).
std::vector<std::uint64_t> all_models(const CnfFormula& f);
std::vector<std::uint64_t> minimal_models(const CnfFormula& f);
std::vector<std::string> mask_names(const CnfFormula& f, std::uint64_t m);

// Prenex 2QBF, forall block then exists block, CNF matrix. The matrix formula
// is normalized so its variable list is exactly universal ++ existential.
class Qbf2Formula {
public:
    Qbf2Formula(std::vector<std::string> universal, std::vector<std::string> existential,
                const CnfFormula& matrix);

    const std::vector<std::string>& universal() const { return universal_; }
    const std::vector<std::string>& existential() const { return existential_; }
    const CnfFormula& matrix() const { return matrix_; }
    bool is_universal(int var) const { return var < static_cast<int>(universal_.size()); }

private:
    std::vector<std::string> universal_;
    std::vector<std::string> existential_;
    CnfFormula matrix_;
};

// Brute-force validity: every universal assignment admits an existential
// completion satisfying the matrix. Requires <= 20 variables in total.
bool qbf2_valid(const Qbf2Formula& f);

struct MinsatInstance {
    CnfFormula formula;
    std::string target;
};

// True when the target variable is true in some subset-minimal model.
bool minsat_member(const MinsatInstance& inst);

std::string to_text(const CnfFormula& f);
std::string to_text(const Qbf2Formula& f);
std::string to_text(const MinsatInstance& inst);

// Instance generators. Enumeration is canonical and duplicate-free: for each
// block-size pair the clause universe is ordered by (width, variable combo,
// sign pattern) and formulas are its subsets of size 1..max_clauses, in
// lexicographic order, keeping only formulas in which every declared variable
// occurs. Universal variables are named y1..; existential numbering continues
// after them (z3, z4 when there are two universals).
struct QbfFamilyParams {
    int max_y = 2;
    int max_z = 2;
    int max_clauses = 3;
    int max_width = 3;
    bool monotone = false;
    bool every_clause_touches_z = false;
};

std::vector<Qbf2Formula> enumerate_qbf2(const QbfFamilyParams& p);

// Seeded random formulas within the same bounds, globally deduplicated. May
// return fewer than `count` when the family is too small.
std::vector<Qbf2Formula> sample_qbf2(const QbfFamilyParams& p, std::uint64_t seed, int count);

struct CnfFamilyParams {
    int max_vars = 3;
    int max_clauses = 3;
    int max_width = 3;
    bool monotone = false;
};

// Every (formula, target) pair, targets in declared variable order.
std::vector<MinsatInstance> enumerate_minsat(const CnfFamilyParams& p);
std::vector<MinsatInstance> sample_minsat(const CnfFamilyParams& p, std::uint64_t seed, int count);

} // namespace argkit
