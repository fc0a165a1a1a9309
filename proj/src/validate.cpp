#include "argkit/validate.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "argkit/graph_classes.hpp"
#include "argkit/io.hpp"
#include "argkit/semantics.hpp"

namespace argkit {

namespace {

struct ClaimName {
    ClaimId id;
    const char* name;
};

constexpr ClaimName claim_names[] = {
    {ClaimId::LEM1_1, "lem1_1"},           {ClaimId::LEM1_2, "lem1_2"},
    {ClaimId::LEM1_3, "lem1_3"},           {ClaimId::LEM1_4, "lem1_4"},
    {ClaimId::LEM1_5, "lem1_5"},           {ClaimId::PROP1, "prop1"},
    {ClaimId::PROP2, "prop2"},             {ClaimId::PROP3, "prop3"},
    {ClaimId::PROP4, "prop4"},             {ClaimId::PROP5, "prop5"},
    {ClaimId::THM1_DIST, "thm1_dist"},     {ClaimId::THM2_DIST, "thm2_dist"},
    {ClaimId::THM3_DIST, "thm3_dist"},     {ClaimId::THM4_DIST, "thm4_dist"},
    {ClaimId::THM5_NOEVEN, "thm5_noeven"}, {ClaimId::THM6_DIST, "thm6_dist"},
    {ClaimId::THM7_DIST, "thm7_dist"},     {ClaimId::THM8_DIST, "thm8_dist"},
    {ClaimId::LATTICE, "lattice"},         {ClaimId::NONEMPTY, "nonempty"},
    {ClaimId::STB_COLLAPSE, "stb_collapse"},
};

std::string yn(bool b) { return b ? "YES" : "NO"; }

bool subset_of(const ExtensionSet& a, const ExtensionSet& b) {
    for (const auto& s : a)
        if (!b.contains(s)) return false;
    return true;
}

bool same_extensions(const ExtensionSet& a, const ExtensionSet& b) {
    return a.size() == b.size() && subset_of(a, b);
}

} // namespace

std::string to_string(ClaimId c) {
    for (const auto& cn : claim_names)
        if (cn.id == c) return cn.name;
    throw UsageError("unknown claim id");
}

ClaimId claim_from_string(std::string_view s) {
    for (const auto& cn : claim_names)
        if (s == cn.name) return cn.id;
    throw UsageError("unknown claim: " + std::string(s));
}

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> all = [] {
        std::vector<ClaimId> v;
        for (const auto& cn : claim_names) v.push_back(cn.id);
        return v;
    }();
    return all;
}

ClaimInfo claim_info(ClaimId c) {
    using V = ReductionVariant;
    switch (c) {
    case ClaimId::LEM1_1:
    case ClaimId::LEM1_2:
    case ClaimId::LEM1_3:
    case ClaimId::LEM1_4:
    case ClaimId::LEM1_5:
    case ClaimId::PROP1:
    case ClaimId::THM1_DIST:
        return {FamilyKind::Qbf, true, false, 1, false, V::Literal};
    case ClaimId::THM2_DIST:
        return {FamilyKind::Qbf, false, false, 2, false, V::Literal};
    case ClaimId::PROP2:
        return {FamilyKind::Qbf, true, true, 3, true, V::Literal};
    case ClaimId::THM3_DIST:
        return {FamilyKind::Qbf, true, true, 3, true, V::Repaired};
    case ClaimId::PROP3:
        return {FamilyKind::Qbf, true, true, 4, false, V::Literal};
    case ClaimId::THM4_DIST:
        return {FamilyKind::Qbf, false, true, 4, false, V::Literal};
    case ClaimId::PROP4:
        return {FamilyKind::Minsat, false, false, 5, true, V::Repaired};
    case ClaimId::THM5_NOEVEN:
    case ClaimId::THM6_DIST:
        return {FamilyKind::Minsat, false, false, 5, true, V::Repaired};
    case ClaimId::PROP5:
    case ClaimId::THM7_DIST:
        return {FamilyKind::Qbf, true, false, 6, false, V::Literal};
    case ClaimId::THM8_DIST:
        return {FamilyKind::Qbf, false, false, 6, false, V::Literal};
    case ClaimId::LATTICE:
    case ClaimId::NONEMPTY:
    case ClaimId::STB_COLLAPSE:
        return {FamilyKind::Frameworks, false, false, 0, false, V::Literal};
    }
    throw UsageError("unknown claim id");
}

namespace {

// Biconditional chain: the oracle bit must match every solver statement.
InstanceOutcome chain_outcome(bool oracle, const std::string& oracle_text,
                              std::initializer_list<std::pair<std::string, bool>> statements) {
    InstanceOutcome out;
    out.oracle = oracle_text + " = " + yn(oracle);
    bool ok = true;
    std::string s;
    for (const auto& [text, value] : statements) {
        if (!s.empty()) s += ", ";
        s += text + " = " + yn(value);
        ok = ok && value == oracle;
    }
    out.solver = s;
    out.status = ok ? InstanceOutcome::Status::Holds : InstanceOutcome::Status::Fails;
    return out;
}

InstanceOutcome deletion_outcome(const Framework& f, GraphClassId cls,
                                 const std::vector<std::string>& names, bool exact,
                                 int claimed_k, int exact_max_args) {
    InstanceOutcome out;
    ArgSet del = f.set_of(names);
    std::string set_text = format_extension(f, del);
    out.oracle = "claimed: deleting " + set_text + " yields " + to_string(cls) +
                 (exact ? ", distance exactly " + std::to_string(claimed_k) : "");
    bool ub = verify_deletion(f, cls, del);
    out.solver = "verify_deletion(" + to_string(cls) + ", " + set_text + ") = " + yn(ub);
    bool ok = ub;
    if (ok && exact && !is_member(f, cls) && f.size() <= exact_max_args) {
        DistanceCertificate d = distance(f, cls);
        out.solver += ", distance." + std::string("k = ") + std::to_string(d.k);
        ok = d.k == claimed_k;
    }
    out.status = ok ? InstanceOutcome::Status::Holds : InstanceOutcome::Status::Fails;
    return out;
}

InstanceOutcome skipped(const std::exception& e) {
    InstanceOutcome out;
    out.status = InstanceOutcome::Status::Skipped;
    out.solver = e.what();
    return out;
}

} // namespace

InstanceOutcome check_claim(ClaimId c, const Qbf2Formula& phi, const CheckOptions& opt) {
    try {
        switch (c) {
        case ClaimId::LEM1_1:
        case ClaimId::LEM1_2:
        case ClaimId::LEM1_3:
        case ClaimId::LEM1_4:
        case ClaimId::LEM1_5: {
            int k = static_cast<int>(c) - static_cast<int>(ClaimId::LEM1_1);
            Lemma1Verdict v = check_lemma1(phi);
            InstanceOutcome out;
            out.oracle = "item " + std::to_string(k + 1) + " holds";
            out.solver = v.item[static_cast<std::size_t>(k)]
                             ? "item holds"
                             : v.detail[static_cast<std::size_t>(k)];
            out.status = v.item[static_cast<std::size_t>(k)] ? InstanceOutcome::Status::Holds
                                                             : InstanceOutcome::Status::Fails;
            return out;
        }
        case ClaimId::PROP1: {
            ReductionArtifact art = reduce1(phi);
            return chain_outcome(qbf2_valid(phi), "qbf2_valid",
                                 {{"skeptical(prf, phi)",
                                   skeptical(art.framework, SemanticsId::PRF, "phi")}});
        }
        case ClaimId::PROP2: {
            ReductionArtifact art = reduce3(phi, opt.variant);
            return chain_outcome(
                qbf2_valid(phi), "qbf2_valid",
                {{"skeptical(sem, phi_p)", skeptical(art.framework, SemanticsId::SEM, "phi_p")},
                 {"not credulous(sem, phi_bar)",
                  !credulous(art.framework, SemanticsId::SEM, "phi_bar")}});
        }
        case ClaimId::PROP3: {
            ReductionArtifact art = reduce4(phi);
            return chain_outcome(
                qbf2_valid(phi), "qbf2_valid",
                {{"skeptical(sem, phi)", skeptical(art.framework, SemanticsId::SEM, "phi")},
                 {"not credulous(sem, phi_bar)",
                  !credulous(art.framework, SemanticsId::SEM, "phi_bar")}});
        }
        case ClaimId::PROP5: {
            ReductionArtifact art = reduce6(phi);
            return chain_outcome(
                qbf2_valid(phi), "qbf2_valid",
                {{"skeptical(stg, phi)", skeptical(art.framework, SemanticsId::STG, "phi")},
                 {"not credulous(stg, phi_bar)",
                  !credulous(art.framework, SemanticsId::STG, "phi_bar")}});
        }
        case ClaimId::THM1_DIST:
            return deletion_outcome(reduce1(phi).framework, GraphClassId::BIP, {"phi"}, true, 1,
                                    opt.exact_distance_max_args);
        case ClaimId::THM2_DIST:
            return deletion_outcome(reduce2(phi).framework, GraphClassId::SYM, {"phi", "b"},
                                    true, 2, opt.exact_distance_max_args);
        case ClaimId::THM3_DIST:
            return deletion_outcome(reduce3(phi, opt.variant).framework, GraphClassId::BIP,
                                    {"g"}, false, 0, opt.exact_distance_max_args);
        case ClaimId::THM4_DIST:
            return deletion_outcome(reduce4(phi).framework, GraphClassId::SYM, {"phi", "g"},
                                    false, 0, opt.exact_distance_max_args);
        case ClaimId::THM7_DIST:
            return deletion_outcome(reduce6(phi).framework, GraphClassId::BIP,
                                    {"u", "v", "b", "phi"}, false, 0,
                                    opt.exact_distance_max_args);
        case ClaimId::THM8_DIST:
            return deletion_outcome(reduce6(phi).framework, GraphClassId::SYM,
                                    {"u", "v", "b", "phi"}, false, 0,
                                    opt.exact_distance_max_args);
        default:
            throw UsageError("claim " + to_string(c) + " does not take formula instances");
        }
    } catch (const CapacityError& e) {
        return skipped(e);
    }
}

InstanceOutcome check_claim(ClaimId c, const MinsatInstance& inst, const CheckOptions& opt) {
    try {
        switch (c) {
        case ClaimId::PROP4: {
            ReductionArtifact art = reduce5(inst, opt.variant);
            return chain_outcome(
                minsat_member(inst), "minsat_member",
                {{"credulous(stg, " + inst.target + ")",
                  credulous(art.framework, SemanticsId::STG, inst.target)},
                 {"not skeptical(stg, q)",
                  !skeptical(art.framework, SemanticsId::STG, "q")}});
        }
        case ClaimId::THM5_NOEVEN: {
            ReductionArtifact art = reduce5(inst, opt.variant);
            const Framework& f = art.framework;
            InstanceOutcome out;
            out.oracle = "claimed: the self-loop at b is the only cycle";
            bool member = is_member(f, GraphClassId::NOEVEN);
            std::vector<std::vector<int>> cycles = simple_cycles(f);
            bool only_b =
                cycles.size() == 1 && cycles[0] == std::vector<int>{f.require_index("b")};
            out.solver = "is_member(noeven) = " + yn(member) +
                         ", simple cycle count = " + std::to_string(cycles.size());
            out.status = member && only_b ? InstanceOutcome::Status::Holds
                                          : InstanceOutcome::Status::Fails;
            return out;
        }
        case ClaimId::THM6_DIST:
            return deletion_outcome(reduce5(inst, opt.variant).framework, GraphClassId::ACY,
                                    {"b"}, true, 1, opt.exact_distance_max_args);
        default:
            throw UsageError("claim " + to_string(c) + " does not take minsat instances");
        }
    } catch (const CapacityError& e) {
        return skipped(e);
    }
}

InstanceOutcome check_claim(ClaimId c, const Framework& f) {
    try {
        switch (c) {
        case ClaimId::LATTICE: {
            ExtensionSet stb = extensions(f, SemanticsId::STB);
            ExtensionSet sem = extensions(f, SemanticsId::SEM);
            ExtensionSet prf = extensions(f, SemanticsId::PRF);
            ExtensionSet com = extensions(f, SemanticsId::COM);
            ExtensionSet adm = extensions(f, SemanticsId::ADM);
            struct Step {
                const char* name;
                const ExtensionSet* inner;
                const ExtensionSet* outer;
            };
            const Step steps[] = {{"stb subset of sem", &stb, &sem},
                                  {"sem subset of prf", &sem, &prf},
                                  {"prf subset of com", &prf, &com},
                                  {"com subset of adm", &com, &adm}};
            InstanceOutcome out;
            out.oracle = "stb within sem within prf within com within adm";
            for (const auto& st : steps) {
                if (!subset_of(*st.inner, *st.outer)) {
                    out.solver = std::string(st.name) + " violated";
                    out.status = InstanceOutcome::Status::Fails;
                    return out;
                }
            }
            out.solver = "all inclusions hold";
            out.status = InstanceOutcome::Status::Holds;
            return out;
        }
        case ClaimId::NONEMPTY: {
            InstanceOutcome out;
            out.oracle = "every semantics except stb yields an extension; grd yields one";
            for (SemanticsId s : all_semantics()) {
                if (s == SemanticsId::STB) continue;
                ExtensionSet e = extensions(f, s);
                if (e.empty()) {
                    out.solver = to_string(s) + " produced no extension";
                    out.status = InstanceOutcome::Status::Fails;
                    return out;
                }
                if (s == SemanticsId::GRD && e.size() != 1) {
                    out.solver = "grd produced " + std::to_string(e.size()) + " extensions";
                    out.status = InstanceOutcome::Status::Fails;
                    return out;
                }
            }
            out.solver = "all semantics nonempty, grd unique";
            out.status = InstanceOutcome::Status::Holds;
            return out;
        }
        case ClaimId::STB_COLLAPSE: {
            InstanceOutcome out;
            out.oracle = "nonempty stb collapses to sem and stg";
            ExtensionSet stb = extensions(f, SemanticsId::STB);
            if (stb.empty()) {
                out.solver = "stb empty, nothing to check";
                out.status = InstanceOutcome::Status::Holds;
                return out;
            }
            ExtensionSet sem = extensions(f, SemanticsId::SEM);
            ExtensionSet stg = extensions(f, SemanticsId::STG);
            bool ok = same_extensions(stb, sem) && same_extensions(stb, stg);
            out.solver = std::string("stb == sem: ") + yn(same_extensions(stb, sem)) +
                         ", stb == stg: " + yn(same_extensions(stb, stg));
            out.status = ok ? InstanceOutcome::Status::Holds : InstanceOutcome::Status::Fails;
            return out;
        }
        default:
            throw UsageError("claim " + to_string(c) + " does not take framework instances");
        }
    } catch (const CapacityError& e) {
        return skipped(e);
    }
}

bool Lemma1Verdict::all() const {
    return item[0] && item[1] && item[2] && item[3] && item[4];
}

namespace {

// The plain-y members of p, completed with the bars of the other universals.
ArgSet universal_form(const Framework& f, const Qbf2Formula& phi, const ArgSet& p) {
    ArgSet out = f.empty_set();
    for (const auto& y : phi.universal()) {
        int yi = f.require_index(y);
        out.set(p.test(yi) ? yi : f.require_index("n" + y));
    }
    return out;
}

} // namespace

Lemma1Verdict check_lemma1(const Qbf2Formula& phi) {
    Lemma1Verdict v;
    v.item.fill(true);

    ReductionArtifact art = reduce1(phi);
    const Framework& f = art.framework;
    const CnfFormula& m = phi.matrix();
    ExtensionSet adm = extensions(f, SemanticsId::ADM);
    ExtensionSet prf = extensions(f, SemanticsId::PRF);

    int phi_i = f.require_index("phi");
    ArgSet clause_args = f.attackers_of(phi_i);
    ArgSet forbidden = clause_args;
    forbidden.set(f.require_index("b"));
    forbidden.set(f.require_index("b_bar"));

    ArgSet y_args = f.empty_set();
    for (const auto& y : phi.universal()) {
        y_args.set(f.require_index(y));
        y_args.set(f.require_index("n" + y));
    }

    // (1) no admissible set touches b, b_bar or a clause argument
    for (const auto& s : adm) {
        if (s.intersects(forbidden)) {
            v.item[0] = false;
            v.detail[0] = "admissible set " + format_extension(f, s) + " hits a forbidden argument";
            break;
        }
    }

    // (2) every S with the complement bars is admissible ...
    int ny = static_cast<int>(phi.universal().size());
    for (std::uint32_t mask = 0; mask < (1u << ny) && v.item[1]; ++mask) {
        ArgSet s = f.empty_set();
        for (int j = 0; j < ny; ++j) {
            const std::string& y = phi.universal()[static_cast<std::size_t>(j)];
            if ((mask >> j) & 1)
                s.set(f.require_index(y));
            else
                s.set(f.require_index("n" + y));
        }
        if (!adm.contains(s)) {
            v.item[1] = false;
            v.detail[1] = "claimed admissible set " + format_extension(f, s) + " is not admissible";
        }
    }
    // ... and no other strict subset of the universal arguments is preferred
    for (const auto& p : prf) {
        if (!v.item[1]) break;
        if (p.is_subset_of(y_args) && p != y_args && p != universal_form(f, phi, p)) {
            v.item[1] = false;
            v.detail[1] =
                "preferred extension " + format_extension(f, p) + " is a malformed universal set";
        }
    }

    // (3) preferred extensions without phi are exactly the universal-form sets
    for (const auto& p : prf) {
        if (p.test(phi_i)) continue;
        if (p != universal_form(f, phi, p)) {
            v.item[2] = false;
            v.detail[2] = "preferred extension " + format_extension(f, p) +
                          " omits phi but is not of the universal form";
            break;
        }
    }

    // (4) preferred extensions with phi select a model
    for (const auto& p : prf) {
        if (!p.test(phi_i)) continue;
        std::vector<std::string> true_vars;
        for (int var = 0; var < m.num_vars(); ++var)
            if (p.test(f.require_index(m.variable(var)))) true_vars.push_back(m.variable(var));
        if (!m.is_model(true_vars)) {
            v.item[3] = false;
            v.detail[3] = "preferred extension " + format_extension(f, p) +
                          " contains phi but selects no model";
            break;
        }
    }

    // (5) every model induces a preferred extension
    for (std::uint64_t model : all_models(m)) {
        ArgSet s = f.empty_set();
        for (int var = 0; var < m.num_vars(); ++var) {
            if ((model >> var) & 1)
                s.set(f.require_index(m.variable(var)));
            else
                s.set(f.require_index("n" + m.variable(var)));
        }
        s.set(phi_i);
        if (!prf.contains(s)) {
            v.item[4] = false;
            v.detail[4] =
                "claimed preferred set " + format_extension(f, s) + " is not preferred";
            break;
        }
    }

    return v;
}

std::vector<Framework> all_frameworks(int n) {
    if (n < 0 || n > 4)
        throw UsageError("all_frameworks enumerates 2^(n*n) digraphs; n must be 0..4");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<Framework> out;
    std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<std::string, std::string>> atts;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((mask >> (i * n + j)) & 1)
                    atts.emplace_back(names[static_cast<std::size_t>(i)],
                                      names[static_cast<std::size_t>(j)]);
        out.emplace_back(names, std::move(atts));
    }
    return out;
}

Framework random_framework(std::mt19937_64& g, int max_args) {
    if (max_args < 0) throw UsageError("max_args must be nonnegative");
    int n = static_cast<int>(g() % static_cast<std::uint64_t>(max_args + 1));
    static constexpr int densities[] = {100000, 250000, 500000}; // per million
    int density = densities[g() % 3];
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> atts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (static_cast<int>(g() % 1000000) < density)
                atts.emplace_back(names[static_cast<std::size_t>(i)],
                                  names[static_cast<std::size_t>(j)]);
    return Framework(std::move(names), std::move(atts));
}

namespace {

struct ReportBuilder {
    VerificationReport r;
    bool any_fail = false;

    void record(const InstanceOutcome& o, const std::string& instance_text) {
        switch (o.status) {
        case InstanceOutcome::Status::Holds:
            ++r.instances_checked;
            break;
        case InstanceOutcome::Status::Fails:
            ++r.instances_checked;
            any_fail = true;
            if (static_cast<int>(r.counterexamples.size()) < r.params.counterexample_cap)
                r.counterexamples.push_back({instance_text, o.solver, o.oracle});
            break;
        case InstanceOutcome::Status::Skipped:
            ++r.instances_skipped;
            break;
        }
    }

    VerificationReport finish(std::chrono::steady_clock::time_point t0) {
        r.holds = !any_fail;
        r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return std::move(r);
    }
};

QbfFamilyParams qbf_family(const ClaimInfo& info, const FamilyParams& p) {
    return {p.max_y, p.max_z, p.max_clauses, p.max_width, info.monotone, info.touches_z};
}

CnfFamilyParams cnf_family(const ClaimInfo& info, const FamilyParams& p) {
    return {p.max_vars, p.max_clauses, p.max_width, info.monotone};
}

} // namespace

VerificationReport run_family(ClaimId c, const FamilyParams& params) {
    if (c >= ClaimId::LEM1_1 && c <= ClaimId::LEM1_5) {
        int k = static_cast<int>(c) - static_cast<int>(ClaimId::LEM1_1);
        return run_lemma1_family(params)[static_cast<std::size_t>(k)];
    }

    ClaimInfo info = claim_info(c);
    ReportBuilder b;
    b.r.claim = c;
    b.r.params = params;
    CheckOptions opt{params.variant.value_or(info.default_variant),
                     params.exact_distance_max_args};
    if (info.variant_relevant) b.r.variant = opt.variant;

    auto t0 = std::chrono::steady_clock::now();
    switch (info.kind) {
    case FamilyKind::Qbf: {
        std::vector<Qbf2Formula> family =
            params.exhaustive ? enumerate_qbf2(qbf_family(info, params))
                              : sample_qbf2(qbf_family(info, params), params.seed,
                                            params.samples);
        for (const auto& phi : family) b.record(check_claim(c, phi, opt), to_text(phi));
        break;
    }
    case FamilyKind::Minsat: {
        std::vector<MinsatInstance> family =
            params.exhaustive ? enumerate_minsat(cnf_family(info, params))
                              : sample_minsat(cnf_family(info, params), params.seed,
                                              params.samples);
        for (const auto& inst : family) b.record(check_claim(c, inst, opt), to_text(inst));
        break;
    }
    case FamilyKind::Frameworks: {
        if (params.exhaustive) {
            for (const auto& f : all_frameworks(params.exhaustive_args))
                b.record(check_claim(c, f), emit_apx(f));
        } else {
            std::mt19937_64 g(params.seed);
            for (int i = 0; i < params.samples; ++i) {
                Framework f = random_framework(g, params.max_args);
                b.record(check_claim(c, f), emit_apx(f));
            }
        }
        break;
    }
    }
    return b.finish(t0);
}

std::vector<VerificationReport> run_lemma1_family(const FamilyParams& params) {
    std::vector<ReportBuilder> builders(5);
    for (int k = 0; k < 5; ++k) {
        builders[static_cast<std::size_t>(k)].r.claim =
            static_cast<ClaimId>(static_cast<int>(ClaimId::LEM1_1) + k);
        builders[static_cast<std::size_t>(k)].r.params = params;
    }

    ClaimInfo info = claim_info(ClaimId::LEM1_1);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Qbf2Formula> family =
        params.exhaustive
            ? enumerate_qbf2(qbf_family(info, params))
            : sample_qbf2(qbf_family(info, params), params.seed, params.samples);
    for (const auto& phi : family) {
        std::string text = to_text(phi);
        try {
            Lemma1Verdict v = check_lemma1(phi);
            for (int k = 0; k < 5; ++k) {
                InstanceOutcome o;
                o.oracle = "item " + std::to_string(k + 1) + " holds";
                bool ok = v.item[static_cast<std::size_t>(k)];
                o.solver = ok ? "item holds" : v.detail[static_cast<std::size_t>(k)];
                o.status =
                    ok ? InstanceOutcome::Status::Holds : InstanceOutcome::Status::Fails;
                builders[static_cast<std::size_t>(k)].record(o, text);
            }
        } catch (const CapacityError& e) {
            for (auto& bd : builders) {
                InstanceOutcome o;
                o.status = InstanceOutcome::Status::Skipped;
                o.solver = e.what();
                bd.record(o, text);
            }
        }
    }

    std::vector<VerificationReport> out;
    for (auto& bd : builders) out.push_back(bd.finish(t0));
    return out;
}

std::vector<VerificationReport> run_claim(ClaimId c, const FamilyParams& params) {
    ClaimInfo info = claim_info(c);
    if (info.variant_relevant && !params.variant) {
        FamilyParams lit = params;
        lit.variant = ReductionVariant::Literal;
        FamilyParams rep = params;
        rep.variant = ReductionVariant::Repaired;
        return {run_family(c, lit), run_family(c, rep)};
    }
    return {run_family(c, params)};
}

namespace {

nlohmann::json params_to_json(const ClaimInfo& info, const FamilyParams& p) {
    nlohmann::json j;
    j["exhaustive"] = p.exhaustive;
    j["seed"] = p.seed;
    j["samples"] = p.samples;
    switch (info.kind) {
    case FamilyKind::Qbf:
        j["max_y"] = p.max_y;
        j["max_z"] = p.max_z;
        j["max_clauses"] = p.max_clauses;
        j["max_width"] = p.max_width;
        j["monotone"] = info.monotone;
        j["every_clause_touches_z"] = info.touches_z;
        break;
    case FamilyKind::Minsat:
        j["max_vars"] = p.max_vars;
        j["max_clauses"] = p.max_clauses;
        j["max_width"] = p.max_width;
        j["monotone"] = info.monotone;
        break;
    case FamilyKind::Frameworks:
        j["exhaustive_args"] = p.exhaustive_args;
        j["max_args"] = p.max_args;
        break;
    }
    return j;
}

} // namespace

nlohmann::json report_to_json(const VerificationReport& r, bool include_timing) {
    nlohmann::json j;
    j["claim"] = to_string(r.claim);
    if (r.variant) j["variant"] = to_string(*r.variant);
    j["params"] = params_to_json(claim_info(r.claim), r.params);
    j["instances_checked"] = r.instances_checked;
    j["instances_skipped"] = r.instances_skipped;
    j["verdict"] = r.holds ? "holds" : "fails";
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& ce : r.counterexamples)
        cex.push_back({{"instance", ce.instance}, {"solver", ce.solver}, {"oracle", ce.oracle}});
    j["counterexamples"] = cex;
    if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

std::string report_table(const std::vector<VerificationReport>& reports) {
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    std::string out = pad("CLAIM", 14) + pad("VARIANT", 10) + pad("CHECKED", 9) +
                      pad("SKIPPED", 9) + "VERDICT\n";
    for (const auto& r : reports) {
        out += pad(to_string(r.claim), 14);
        out += pad(r.variant ? to_string(*r.variant) : "-", 10);
        out += pad(std::to_string(r.instances_checked), 9);
        out += pad(std::to_string(r.instances_skipped), 9);
        out += r.holds ? "holds" : "fails";
        out += "\n";
    }
    return out;
}

} // namespace argkit
