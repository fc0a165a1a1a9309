#include "argkit/reductions.hpp"

namespace argkit {

std::string to_string(ReductionVariant v) {
    return v == ReductionVariant::Literal ? "literal" : "repaired";
}

ReductionVariant variant_from_string(std::string_view s) {
    if (s == "literal") return ReductionVariant::Literal;
    if (s == "repaired") return ReductionVariant::Repaired;
    throw UsageError("unknown variant: " + std::string(s));
}

namespace {

using Atts = std::vector<std::pair<std::string, std::string>>;

struct Gadget {
    const CnfFormula& f;
    std::vector<std::string> names;
    Atts atts;
    std::vector<std::string> clause_arg; // per clause index

    explicit Gadget(const CnfFormula& f_) : f(f_) {}

    void arg(const std::string& n) { names.push_back(n); }
    void att(const std::string& a, const std::string& b) { atts.emplace_back(a, b); }

    std::string plain(int var) const { return f.variable(var); }
    std::string bar(int var) const { return "n" + f.variable(var); }
    std::string lit(const CnfFormula::Lit& l) const { return l.negated ? bar(l.var) : plain(l.var); }

    // clause arguments in input order; positive clauses c1.., negative nc1..
    // when a monotone split is given, otherwise c1.. throughout
    void add_clause_args(const MonotoneSplit* split) {
        clause_arg.assign(static_cast<std::size_t>(f.num_clauses()), "");
        if (split) {
            int np = 0, nn = 0;
            for (int i = 0; i < f.num_clauses(); ++i) {
                bool pos = std::find(split->positive.begin(), split->positive.end(), i) !=
                           split->positive.end();
                clause_arg[static_cast<std::size_t>(i)] =
                    pos ? "c" + std::to_string(++np) : "nc" + std::to_string(++nn);
            }
        } else {
            for (int i = 0; i < f.num_clauses(); ++i)
                clause_arg[static_cast<std::size_t>(i)] = "c" + std::to_string(i + 1);
        }
        for (int i = 0; i < f.num_clauses(); ++i) arg(clause_arg[static_cast<std::size_t>(i)]);
    }

    void add_var_args() {
        for (int v = 0; v < f.num_vars(); ++v) {
            arg(plain(v));
            arg(bar(v));
        }
    }

    void mutual(const std::string& a, const std::string& b) {
        att(a, b);
        att(b, a);
    }

    void mutual_var_attacks() {
        for (int v = 0; v < f.num_vars(); ++v) mutual(plain(v), bar(v));
    }

    void occurrence_attacks(bool mutual_dir) {
        for (int i = 0; i < f.num_clauses(); ++i) {
            for (const auto& l : f.clauses()[static_cast<std::size_t>(i)]) {
                att(lit(l), clause_arg[static_cast<std::size_t>(i)]);
                if (mutual_dir) att(clause_arg[static_cast<std::size_t>(i)], lit(l));
            }
        }
    }

    void clauses_attack(const std::string& target) {
        for (int i = 0; i < f.num_clauses(); ++i)
            att(clause_arg[static_cast<std::size_t>(i)], target);
    }
};

MonotoneSplit require_monotone(const CnfFormula& f, int reduction_id) {
    MonotoneSplit s = split_monotone(f);
    if (!s.monotone)
        throw UsageError("reduction " + std::to_string(reduction_id) +
                         " requires a monotone matrix");
    return s;
}

void require_touches_existential(const Qbf2Formula& phi, int reduction_id) {
    for (const auto& c : phi.matrix().clauses()) {
        bool touches = false;
        for (const auto& l : c) touches = touches || !phi.is_universal(l.var);
        if (!touches)
            throw UsageError("reduction " + std::to_string(reduction_id) +
                             " requires an existential literal in every clause");
    }
}

ReductionClaim make_claim(const Framework& fw, GraphClassId cls,
                          const std::vector<std::string>& deleted) {
    ArgSet s = fw.set_of(deleted);
    return {cls, s, verify_deletion(fw, cls, s)};
}

} // namespace

ReductionArtifact reduce1(const Qbf2Formula& phi) {
    const CnfFormula& m = phi.matrix();
    MonotoneSplit split = require_monotone(m, 1);
    Gadget g(m);
    g.arg("phi");
    g.arg("b");
    g.arg("b_bar");
    g.add_clause_args(&split);
    g.add_var_args();

    g.clauses_attack("phi");
    g.att("phi", "b");
    g.att("phi", "b_bar");
    g.mutual_var_attacks();
    g.occurrence_attacks(true);
    for (int i : split.positive) g.att("b", g.clause_arg[static_cast<std::size_t>(i)]);
    for (int i : split.negative) g.att("b_bar", g.clause_arg[static_cast<std::size_t>(i)]);
    for (const auto& z : phi.existential()) {
        g.att("b", "n" + z);
        g.att("b_bar", z);
    }

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::BIP, {"phi"});
    return {std::move(fw), 1,      ReductionVariant::Literal, {{"phi", "phi"}},
            claim,         std::nullopt, to_text(phi)};
}

ReductionArtifact reduce2(const Qbf2Formula& phi) {
    const CnfFormula& m = phi.matrix();
    Gadget g(m);
    g.arg("phi");
    g.arg("b");
    g.add_clause_args(nullptr);
    g.add_var_args();

    g.clauses_attack("phi");
    g.att("phi", "b");
    g.mutual_var_attacks();
    g.occurrence_attacks(true);
    for (int i = 0; i < m.num_clauses(); ++i)
        g.att("b", g.clause_arg[static_cast<std::size_t>(i)]);
    for (const auto& z : phi.existential()) {
        g.att("b", z);
        g.att("b", "n" + z);
    }

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::SYM, {"phi", "b"});
    return {std::move(fw), 2,      ReductionVariant::Literal, {{"phi", "phi"}},
            claim,         std::nullopt, to_text(phi)};
}

ReductionArtifact reduce3(const Qbf2Formula& phi, ReductionVariant variant) {
    const CnfFormula& m = phi.matrix();
    MonotoneSplit split = require_monotone(m, 3);
    require_touches_existential(phi, 3);
    Gadget g(m);
    g.arg("phi_p");
    g.arg("phi_n");
    g.arg("phi_bar");
    g.arg("b");
    g.arg("g");
    g.add_clause_args(&split);
    g.add_var_args();
    for (const auto& y : phi.universal()) {
        g.arg(y + "_p");
        g.arg("n" + y + "_p");
    }

    for (int i : split.positive) g.att(g.clause_arg[static_cast<std::size_t>(i)], "phi_p");
    for (int i : split.negative)
        g.att(g.clause_arg[static_cast<std::size_t>(i)],
              variant == ReductionVariant::Literal ? "phi_p" : "phi_n");
    g.mutual_var_attacks();
    g.occurrence_attacks(true);
    for (const auto& y : phi.universal()) {
        g.mutual(y, y + "_p");
        g.mutual("n" + y, "n" + y + "_p");
        g.att("g", y + "_p");
        g.att("g", "n" + y + "_p");
    }
    g.mutual("phi_p", "b");
    g.att("g", "g");
    g.att("g", "b");
    for (int i : split.positive) g.att("g", g.clause_arg[static_cast<std::size_t>(i)]);
    g.mutual("phi_p", "phi_bar");

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::BIP, {"g"});
    return {std::move(fw), 3,      variant,
            {{"phi_p", "phi_p"}, {"phi_bar", "phi_bar"}},
            claim,         std::nullopt, to_text(phi)};
}

ReductionArtifact reduce4(const Qbf2Formula& phi) {
    const CnfFormula& m = phi.matrix();
    require_touches_existential(phi, 4);
    Gadget g(m);
    g.arg("phi");
    g.arg("phi_bar");
    g.arg("b");
    g.arg("g");
    g.add_clause_args(nullptr);
    g.add_var_args();
    for (const auto& y : phi.universal()) {
        g.arg(y + "_p");
        g.arg("n" + y + "_p");
    }

    g.clauses_attack("phi");
    g.mutual_var_attacks();
    g.occurrence_attacks(true);
    for (const auto& y : phi.universal()) {
        g.mutual(y, y + "_p");
        g.mutual("n" + y, "n" + y + "_p");
        g.att("g", y + "_p");
        g.att("g", "n" + y + "_p");
    }
    g.mutual("phi", "b");
    g.att("g", "g");
    g.att("g", "b");
    g.mutual("phi", "phi_bar");

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::SYM, {"phi", "g"});
    return {std::move(fw), 4,      ReductionVariant::Literal,
            {{"phi", "phi"}, {"phi_bar", "phi_bar"}},
            claim,         std::nullopt, to_text(phi)};
}

ReductionArtifact reduce5(const MinsatInstance& inst, ReductionVariant variant) {
    const CnfFormula& m = inst.formula;
    m.require_var(inst.target);
    Gadget g(m);
    g.arg("phi");
    g.arg("b");
    g.arg("q");
    g.add_clause_args(nullptr);
    g.add_var_args();
    std::vector<std::string> witness;
    for (int i = 0; i < m.num_clauses(); ++i) {
        witness.push_back("E" + std::to_string(i + 1));
        g.arg(witness.back());
    }

    g.clauses_attack("phi");
    g.att("phi", "b");
    g.att("b", "b");
    g.att("q", inst.target);
    for (int v = 0; v < m.num_vars(); ++v) {
        g.att(g.bar(v), g.plain(v));
        if (variant == ReductionVariant::Literal) g.att(g.plain(v), g.bar(v));
    }
    g.occurrence_attacks(false);
    for (int i = 0; i < m.num_clauses(); ++i) {
        const std::string& e = witness[static_cast<std::size_t>(i)];
        for (const auto& a : g.names) {
            if (a == g.clause_arg[static_cast<std::size_t>(i)] || a == "phi" || a == "b")
                continue;
            bool earlier_witness = false;
            for (int j = 0; j < i; ++j)
                earlier_witness = earlier_witness || a == witness[static_cast<std::size_t>(j)];
            if (earlier_witness) continue;
            if (variant == ReductionVariant::Repaired && (a == "q" || a == e)) continue;
            g.att(e, a);
        }
    }

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::ACY, {"b"});
    ReductionClaim extra = make_claim(fw, GraphClassId::NOEVEN, {});
    return {std::move(fw), 5,      variant,
            {{"x_alpha", inst.target}, {"q", "q"}},
            claim,         extra,  to_text(inst)};
}

ReductionArtifact reduce6(const Qbf2Formula& phi) {
    const CnfFormula& m = phi.matrix();
    Gadget g(m);
    g.arg("phi");
    g.arg("phi_bar");
    g.arg("b");
    g.arg("u");
    g.arg("v");
    g.add_clause_args(nullptr);
    g.add_var_args();
    for (const auto& y : phi.universal()) {
        g.arg(y + "_p");
        g.arg("n" + y + "_p");
    }

    g.clauses_attack("phi");
    g.mutual("phi", "phi_bar");
    g.att("phi", "b");
    g.att("b", "b");
    g.mutual_var_attacks();
    for (const auto& y : phi.universal()) {
        g.mutual(y, y + "_p");
        g.mutual("n" + y, "n" + y + "_p");
    }
    g.occurrence_attacks(true);
    g.att("u", "v");
    g.att("v", "v");
    for (const auto& y : phi.universal()) {
        g.att(y + "_p", "u");
        g.att("n" + y + "_p", "u");
    }

    Framework fw(std::move(g.names), std::move(g.atts));
    ReductionClaim claim = make_claim(fw, GraphClassId::SYM, {"u", "v", "b", "phi"});
    std::optional<ReductionClaim> extra;
    if (is_monotone(m))
        extra = make_claim(fw, GraphClassId::BIP, {"u", "v", "b", "phi"});
    return {std::move(fw), 6,      ReductionVariant::Literal,
            {{"phi", "phi"}, {"phi_bar", "phi_bar"}},
            claim,         extra,  to_text(phi)};
}

} // namespace argkit
