#include "argkit/logic.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace argkit {

CnfFormula::CnfFormula(std::vector<std::string> variables,
                       const std::vector<std::vector<Literal>>& clauses)
    : vars_(std::move(variables)) {
    for (int i = 0; i < num_vars(); ++i) {
        if (vars_[static_cast<std::size_t>(i)].empty())
            throw UsageError("empty variable name");
        if (!index_.emplace(vars_[static_cast<std::size_t>(i)], i).second)
            throw UsageError("duplicate variable name: " + vars_[static_cast<std::size_t>(i)]);
    }
    clauses_.reserve(clauses.size());
    for (const auto& cl : clauses) {
        if (cl.empty()) throw UsageError("empty clause");
        Clause c;
        c.reserve(cl.size());
        for (const auto& lit : cl) c.push_back({require_var(lit.variable), lit.negated});
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i].var == c[i - 1].var)
                throw UsageError("tautological clause on variable " +
                                 vars_[static_cast<std::size_t>(c[i].var)]);
        clauses_.push_back(std::move(c));
    }
}

int CnfFormula::var_index(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int CnfFormula::require_var(std::string_view name) const {
    int i = var_index(name);
    if (i < 0) throw UsageError("unknown variable: " + std::string(name));
    return i;
}

bool CnfFormula::is_model_mask(std::uint64_t m) const {
    for (const auto& c : clauses_) {
        bool sat = false;
        for (const auto& l : c) {
            bool v = (m >> l.var) & 1u;
            if (v != l.negated) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool CnfFormula::is_model(const std::vector<std::string>& true_vars) const {
    std::uint64_t m = 0;
    for (const auto& v : true_vars) m |= std::uint64_t{1} << require_var(v);
    return is_model_mask(m);
}

MonotoneSplit split_monotone(const CnfFormula& f) {
    MonotoneSplit s;
    s.monotone = true;
    for (int i = 0; i < f.num_clauses(); ++i) {
        const auto& c = f.clauses()[static_cast<std::size_t>(i)];
        bool any_pos = false, any_neg = false;
        for (const auto& l : c) (l.negated ? any_neg : any_pos) = true;
        if (any_pos && any_neg)
            s.monotone = false;
        else
            (any_neg ? s.negative : s.positive).push_back(i);
    }
    if (!s.monotone) {
        s.positive.clear();
        s.negative.clear();
    }
    return s;
}

bool is_monotone(const CnfFormula& f) { return split_monotone(f).monotone; }

namespace {

void check_model_capacity(int n) {
    if (n > 20)
        throw CapacityError("model enumeration limited to 20 variables, got " +
                            std::to_string(n));
}

} // namespace

std::vector<std::uint64_t> all_models(const CnfFormula& f) {
    check_model_capacity(f.num_vars());
    std::vector<std::uint64_t> out;
    std::uint64_t top = std::uint64_t{1} << f.num_vars();
    for (std::uint64_t m = 0; m < top; ++m)
        if (f.is_model_mask(m)) out.push_back(m);
    return out;
}

std::vector<std::uint64_t> minimal_models(const CnfFormula& f) {
    check_model_capacity(f.num_vars());
    // Any strict subset of m is numerically smaller, so an ascending scan sees
    // minimal models before their supersets.
    std::vector<std::uint64_t> out;
    std::uint64_t top = std::uint64_t{1} << f.num_vars();
    for (std::uint64_t m = 0; m < top; ++m) {
        if (!f.is_model_mask(m)) continue;
        bool minimal = true;
        for (auto k : out) {
            if ((k & m) == k) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

std::vector<std::string> mask_names(const CnfFormula& f, std::uint64_t m) {
    std::vector<std::string> out;
    for (int i = 0; i < f.num_vars(); ++i)
        if ((m >> i) & 1u) out.push_back(f.variable(i));
    return out;
}

Qbf2Formula::Qbf2Formula(std::vector<std::string> universal, std::vector<std::string> existential,
                         const CnfFormula& matrix)
    : universal_(std::move(universal)), existential_(std::move(existential)) {
    std::vector<std::string> all = universal_;
    all.insert(all.end(), existential_.begin(), existential_.end());
    std::vector<std::vector<Literal>> clauses;
    clauses.reserve(static_cast<std::size_t>(matrix.num_clauses()));
    for (const auto& c : matrix.clauses()) {
        std::vector<Literal> cl;
        for (const auto& l : c) cl.push_back({matrix.variable(l.var), l.negated});
        clauses.push_back(std::move(cl));
    }
    // Rebuilding over universal ++ existential validates block disjointness
    // (duplicate name) and that every matrix variable is quantified (unknown
    // variable).
    matrix_ = CnfFormula(std::move(all), clauses);
}

bool qbf2_valid(const Qbf2Formula& f) {
    int ny = static_cast<int>(f.universal().size());
    int nz = static_cast<int>(f.existential().size());
    check_model_capacity(ny + nz);
    std::uint64_t ytop = std::uint64_t{1} << ny;
    std::uint64_t ztop = std::uint64_t{1} << nz;
    for (std::uint64_t ym = 0; ym < ytop; ++ym) {
        bool ok = false;
        for (std::uint64_t zm = 0; zm < ztop && !ok; ++zm)
            ok = f.matrix().is_model_mask(ym | (zm << ny));
        if (!ok) return false;
    }
    return true;
}

bool minsat_member(const MinsatInstance& inst) {
    int t = inst.formula.require_var(inst.target);
    for (auto m : minimal_models(inst.formula))
        if ((m >> t) & 1u) return true;
    return false;
}

std::string to_text(const CnfFormula& f) {
    std::string out;
    for (int i = 0; i < f.num_clauses(); ++i) {
        if (i) out += " & ";
        out += "(";
        const auto& c = f.clauses()[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) out += " | ";
            if (c[j].negated) out += "~";
            out += f.variable(c[j].var);
        }
        out += ")";
    }
    return out;
}

std::string to_text(const Qbf2Formula& f) {
    std::string out = "forall{";
    for (std::size_t i = 0; i < f.universal().size(); ++i) {
        if (i) out += ",";
        out += f.universal()[i];
    }
    out += "} exists{";
    for (std::size_t i = 0; i < f.existential().size(); ++i) {
        if (i) out += ",";
        out += f.existential()[i];
    }
    out += "} ";
    out += to_text(f.matrix());
    return out;
}

std::string to_text(const MinsatInstance& inst) {
    return to_text(inst.formula) + " target=" + inst.target;
}

namespace {

// One clause of the canonical universe: variable indices ascending plus a
// sign word (bit j set = j-th variable negated).
struct ProtoClause {
    std::vector<int> vars;
    std::uint32_t signs;
};

std::vector<ProtoClause> clause_universe(int nvars, int max_width, bool monotone,
                                         bool touch, int first_touch) {
    std::vector<ProtoClause> out;
    int w_cap = std::min(max_width, nvars);
    for (int w = 1; w <= w_cap; ++w) {
        std::vector<int> combo(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) combo[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool touches = !touch;
            for (int v : combo) touches = touches || v >= first_touch;
            if (touches) {
                if (monotone) {
                    out.push_back({combo, 0});
                    out.push_back({combo, (std::uint32_t{1} << w) - 1});
                } else {
                    for (std::uint32_t s = 0; s < (std::uint32_t{1} << w); ++s)
                        out.push_back({combo, s});
                }
            }
            // next combination
            int i = w - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == nvars - w + i) --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < w; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::vector<std::vector<Literal>> build_clauses(const std::vector<std::string>& names,
                                                const std::vector<ProtoClause>& universe,
                                                const std::vector<int>& chosen) {
    std::vector<std::vector<Literal>> out;
    for (int ci : chosen) {
        const auto& pc = universe[static_cast<std::size_t>(ci)];
        std::vector<Literal> cl;
        for (std::size_t j = 0; j < pc.vars.size(); ++j)
            cl.push_back({names[static_cast<std::size_t>(pc.vars[j])],
                          ((pc.signs >> j) & 1u) != 0});
        out.push_back(std::move(cl));
    }
    return out;
}

bool covers_all_vars(const std::vector<ProtoClause>& universe, const std::vector<int>& chosen,
                     int nvars) {
    std::uint32_t used = 0;
    for (int ci : chosen)
        for (int v : universe[static_cast<std::size_t>(ci)].vars)
            used |= std::uint32_t{1} << v;
    return used == (std::uint32_t{1} << nvars) - 1;
}

// All subsets of {0..u-1} of size 1..max_size, lexicographic, through `fn`.
template <typename Fn>
void for_each_subset(int u, int max_size, Fn&& fn) {
    for (int s = 1; s <= std::min(max_size, u); ++s) {
        std::vector<int> chosen(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) chosen[static_cast<std::size_t>(i)] = i;
        while (true) {
            fn(chosen);
            int i = s - 1;
            while (i >= 0 && chosen[static_cast<std::size_t>(i)] == u - s + i) --i;
            if (i < 0) break;
            ++chosen[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<std::string> block_names(const char* prefix, int from, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(from + i + 1));
    return out;
}

} // namespace

std::vector<Qbf2Formula> enumerate_qbf2(const QbfFamilyParams& p) {
    if (p.max_y < 0 || p.max_z < 0 || p.max_clauses < 1 || p.max_width < 1)
        throw UsageError("bad family bounds");
    std::vector<Qbf2Formula> out;
    for (int ny = 0; ny <= p.max_y; ++ny) {
        for (int nz = 0; nz <= p.max_z; ++nz) {
            int nvars = ny + nz;
            if (nvars == 0 || nvars > 30) continue;
            if (p.every_clause_touches_z && nz == 0) continue;
            auto ys = block_names("y", 0, ny);
            auto zs = block_names("z", ny, nz);
            std::vector<std::string> names = ys;
            names.insert(names.end(), zs.begin(), zs.end());
            auto universe =
                clause_universe(nvars, p.max_width, p.monotone, p.every_clause_touches_z, ny);
            for_each_subset(static_cast<int>(universe.size()), p.max_clauses,
                            [&](const std::vector<int>& chosen) {
                                if (!covers_all_vars(universe, chosen, nvars)) return;
                                CnfFormula m(names, build_clauses(names, universe, chosen));
                                out.emplace_back(ys, zs, m);
                            });
        }
    }
    return out;
}

std::vector<Qbf2Formula> sample_qbf2(const QbfFamilyParams& p, std::uint64_t seed, int count) {
    if (p.max_y < 0 || p.max_z < 0 || p.max_clauses < 1 || p.max_width < 1 || count < 0)
        throw UsageError("bad family bounds");
    if (p.every_clause_touches_z && p.max_z == 0)
        throw UsageError("every_clause_touches_z needs max_z >= 1");
    if (p.max_y + p.max_z == 0) throw UsageError("no variables allowed");
    std::mt19937_64 g(seed);
    std::vector<Qbf2Formula> out;
    std::set<std::string> seen;
    long attempts = 0, budget = 200L * (count + 1);
    while (static_cast<int>(out.size()) < count && attempts++ < budget) {
        int ny = static_cast<int>(g() % static_cast<std::uint64_t>(p.max_y + 1));
        int nz = p.every_clause_touches_z
                     ? 1 + static_cast<int>(g() % static_cast<std::uint64_t>(p.max_z))
                     : static_cast<int>(g() % static_cast<std::uint64_t>(p.max_z + 1));
        int nvars = ny + nz;
        if (nvars == 0) continue;
        auto ys = block_names("y", 0, ny);
        auto zs = block_names("z", ny, nz);
        std::vector<std::string> names = ys;
        names.insert(names.end(), zs.begin(), zs.end());
        int m = 1 + static_cast<int>(g() % static_cast<std::uint64_t>(p.max_clauses));
        std::vector<std::vector<Literal>> clauses;
        std::set<std::string> clause_keys;
        bool good = true;
        for (int c = 0; c < m && good; ++c) {
            bool placed = false;
            for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                int w = 1 +
                        static_cast<int>(g() % static_cast<std::uint64_t>(
                                                   std::min(p.max_width, nvars)));
                std::set<int> vs;
                for (int d = 0; d < 16 * w && static_cast<int>(vs.size()) < w; ++d)
                    vs.insert(static_cast<int>(g() % static_cast<std::uint64_t>(nvars)));
                if (static_cast<int>(vs.size()) < w) continue;
                if (p.every_clause_touches_z && *vs.rbegin() < ny) continue;
                std::vector<Literal> cl;
                std::string key;
                bool all_neg = (g() % 2) == 1;
                for (int v : vs) {
                    bool neg = p.monotone ? all_neg : (g() % 2) == 1;
                    cl.push_back({names[static_cast<std::size_t>(v)], neg});
                    key += (neg ? "~" : "") + names[static_cast<std::size_t>(v)] + " ";
                }
                if (!clause_keys.insert(key).second) continue;
                clauses.push_back(std::move(cl));
                placed = true;
            }
            good = placed;
        }
        if (!good) continue;
        Qbf2Formula f(ys, zs, CnfFormula(names, clauses));
        if (seen.insert(to_text(f)).second) out.push_back(std::move(f));
    }
    return out;
}

std::vector<MinsatInstance> enumerate_minsat(const CnfFamilyParams& p) {
    if (p.max_vars < 1 || p.max_clauses < 1 || p.max_width < 1)
        throw UsageError("bad family bounds");
    std::vector<MinsatInstance> out;
    for (int nvars = 1; nvars <= p.max_vars; ++nvars) {
        auto names = block_names("x", 0, nvars);
        auto universe = clause_universe(nvars, p.max_width, p.monotone, false, 0);
        for_each_subset(static_cast<int>(universe.size()), p.max_clauses,
                        [&](const std::vector<int>& chosen) {
                            if (!covers_all_vars(universe, chosen, nvars)) return;
                            CnfFormula f(names, build_clauses(names, universe, chosen));
                            for (const auto& t : names) out.push_back({f, t});
                        });
    }
    return out;
}

std::vector<MinsatInstance> sample_minsat(const CnfFamilyParams& p, std::uint64_t seed,
                                          int count) {
    if (p.max_vars < 1 || p.max_clauses < 1 || p.max_width < 1 || count < 0)
        throw UsageError("bad family bounds");
    std::mt19937_64 g(seed);
    std::vector<MinsatInstance> out;
    std::set<std::string> seen;
    long attempts = 0, budget = 200L * (count + 1);
    while (static_cast<int>(out.size()) < count && attempts++ < budget) {
        int nvars = 1 + static_cast<int>(g() % static_cast<std::uint64_t>(p.max_vars));
        auto names = block_names("x", 0, nvars);
        int m = 1 + static_cast<int>(g() % static_cast<std::uint64_t>(p.max_clauses));
        std::vector<std::vector<Literal>> clauses;
        std::set<std::string> clause_keys;
        bool good = true;
        for (int c = 0; c < m && good; ++c) {
            bool placed = false;
            for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                int w = 1 +
                        static_cast<int>(g() % static_cast<std::uint64_t>(
                                                   std::min(p.max_width, nvars)));
                std::set<int> vs;
                for (int d = 0; d < 16 * w && static_cast<int>(vs.size()) < w; ++d)
                    vs.insert(static_cast<int>(g() % static_cast<std::uint64_t>(nvars)));
                if (static_cast<int>(vs.size()) < w) continue;
                std::vector<Literal> cl;
                std::string key;
                bool all_neg = (g() % 2) == 1;
                for (int v : vs) {
                    bool neg = p.monotone ? all_neg : (g() % 2) == 1;
                    cl.push_back({names[static_cast<std::size_t>(v)], neg});
                    key += (neg ? "~" : "") + names[static_cast<std::size_t>(v)] + " ";
                }
                if (!clause_keys.insert(key).second) continue;
                clauses.push_back(std::move(cl));
                placed = true;
            }
            good = placed;
        }
        if (!good) continue;
        CnfFormula f(names, clauses);
        std::string target = names[g() % static_cast<std::uint64_t>(nvars)];
        MinsatInstance inst{f, target};
        if (seen.insert(to_text(inst)).second) out.push_back(std::move(inst));
    }
    return out;
}

} // namespace argkit
