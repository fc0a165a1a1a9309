#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "argkit/validate.hpp"

using namespace argkit;

namespace {

Qbf2Formula qbf(std::vector<std::string> ys, std::vector<std::string> zs,
                std::vector<std::string> vars,
                std::vector<std::vector<std::pair<std::string, bool>>> clauses) {
    std::vector<std::vector<Literal>> cs;
    for (const auto& c : clauses) {
        std::vector<Literal> cl;
        for (const auto& [v, neg] : c) cl.push_back({v, neg});
        cs.push_back(cl);
    }
    return Qbf2Formula(std::move(ys), std::move(zs), CnfFormula(std::move(vars), cs));
}

CnfFormula cnf(std::vector<std::string> vars,
               std::vector<std::vector<std::pair<std::string, bool>>> clauses) {
    std::vector<std::vector<Literal>> cs;
    for (const auto& c : clauses) {
        std::vector<Literal> cl;
        for (const auto& [v, neg] : c) cl.push_back({v, neg});
        cs.push_back(cl);
    }
    return CnfFormula(std::move(vars), cs);
}

// the running example: forall 3 exists 1,2 (3|1|2) & (~3|~1|~2)
Qbf2Formula running_example() {
    return qbf({"3"}, {"1", "2"}, {"3", "1", "2"},
               {{{"3", false}, {"1", false}, {"2", false}},
                {{"3", true}, {"1", true}, {"2", true}}});
}

} // namespace

TEST_CASE("claim registry") {
    CHECK(all_claims().size() == 21);
    CHECK(all_claims().front() == ClaimId::LEM1_1);
    CHECK(all_claims().back() == ClaimId::STB_COLLAPSE);
    std::set<std::string> names;
    for (ClaimId c : all_claims()) {
        std::string n = to_string(c);
        CHECK(claim_from_string(n) == c);
        names.insert(n);
    }
    CHECK(names.size() == 21);
    CHECK(to_string(ClaimId::LEM1_3) == "lem1_3");
    CHECK(to_string(ClaimId::THM5_NOEVEN) == "thm5_noeven");
    CHECK(to_string(ClaimId::STB_COLLAPSE) == "stb_collapse");
    CHECK_THROWS_AS((void)claim_from_string("nope"), UsageError);
}

TEST_CASE("claim metadata") {
    auto lem = claim_info(ClaimId::LEM1_1);
    CHECK(lem.kind == FamilyKind::Qbf);
    CHECK(lem.monotone);
    CHECK_FALSE(lem.touches_z);
    CHECK(lem.reduction_id == 1);
    CHECK_FALSE(lem.variant_relevant);

    auto p2 = claim_info(ClaimId::PROP2);
    CHECK(p2.monotone);
    CHECK(p2.touches_z);
    CHECK(p2.reduction_id == 3);
    CHECK(p2.variant_relevant);
    CHECK(p2.default_variant == ReductionVariant::Literal);

    auto t3 = claim_info(ClaimId::THM3_DIST);
    CHECK(t3.variant_relevant);
    CHECK(t3.default_variant == ReductionVariant::Repaired);

    auto t4 = claim_info(ClaimId::THM4_DIST);
    CHECK_FALSE(t4.monotone);
    CHECK(t4.touches_z);
    CHECK(t4.reduction_id == 4);

    for (ClaimId c : {ClaimId::PROP4, ClaimId::THM5_NOEVEN, ClaimId::THM6_DIST}) {
        auto inf = claim_info(c);
        CHECK(inf.kind == FamilyKind::Minsat);
        CHECK(inf.reduction_id == 5);
        CHECK(inf.variant_relevant);
        CHECK(inf.default_variant == ReductionVariant::Repaired);
    }
    for (ClaimId c : {ClaimId::PROP5, ClaimId::THM7_DIST}) {
        auto inf = claim_info(c);
        CHECK(inf.monotone);
        CHECK(inf.reduction_id == 6);
    }
    auto t8 = claim_info(ClaimId::THM8_DIST);
    CHECK_FALSE(t8.monotone);
    CHECK(t8.reduction_id == 6);
    for (ClaimId c : {ClaimId::LATTICE, ClaimId::NONEMPTY, ClaimId::STB_COLLAPSE}) {
        auto inf = claim_info(c);
        CHECK(inf.kind == FamilyKind::Frameworks);
        CHECK(inf.reduction_id == 0);
    }
}

TEST_CASE("framework enumeration") {
    CHECK(all_frameworks(0).size() == 1);
    CHECK(all_frameworks(1).size() == 2);
    auto fam = all_frameworks(2);
    REQUIRE(fam.size() == 16);
    CHECK(fam[0].names() == std::vector<std::string>{"a1", "a2"});
    CHECK(fam[0].attacks().empty());
    // mask bit i*n+j encodes ai -> aj
    CHECK(fam[1].has_attack(0, 0));
    CHECK(fam[1].attacks().size() == 1);
    CHECK(fam[2].has_attack(0, 1));
    CHECK(fam[4].has_attack(1, 0));
    CHECK(fam[15].attacks().size() == 4);
    std::set<std::string> seen;
    for (const auto& f : fam) {
        std::string key;
        for (auto [a, b] : f.attacks()) key += std::to_string(a) + ">" + std::to_string(b) + ";";
        CHECK(seen.insert(key).second);
    }
    CHECK_THROWS_AS((void)all_frameworks(5), UsageError);
    CHECK_THROWS_AS((void)all_frameworks(-1), UsageError);
}

TEST_CASE("random frameworks are seed deterministic") {
    std::mt19937_64 g1(9), g2(9);
    for (int i = 0; i < 50; ++i) {
        Framework a = random_framework(g1, 8);
        Framework b = random_framework(g2, 8);
        CHECK(a == b);
        CHECK(a.size() <= 8);
    }
    std::mt19937_64 g3(9);
    CHECK(random_framework(g3, 0).size() == 0);
    CHECK_THROWS_AS((void)random_framework(g3, -1), UsageError);
}

TEST_CASE("lemma one items on single instances") {
    auto v = check_lemma1(running_example());
    CHECK(v.all());
    for (int i = 0; i < 5; ++i) {
        CHECK(v.item[static_cast<std::size_t>(i)]);
        CHECK(v.detail[static_cast<std::size_t>(i)].empty());
    }
    auto w = check_lemma1(qbf({"y1"}, {}, {"y1"}, {{{"y1", false}}}));
    CHECK(w.all());
    CHECK_THROWS_AS((void)check_lemma1(qbf({"y1"}, {"z2"}, {"y1", "z2"},
                                           {{{"y1", false}, {"z2", true}}})),
                    UsageError);
}

TEST_CASE("single instance claim checks") {
    using Status = InstanceOutcome::Status;
    CHECK(check_claim(ClaimId::PROP1, running_example()).status == Status::Holds);
    CHECK(check_claim(ClaimId::THM1_DIST, running_example()).status == Status::Holds);
    CHECK(check_claim(ClaimId::THM2_DIST, running_example()).status == Status::Holds);

    // the unsatisfiable all existential matrix separates the two variants
    auto cx = qbf({}, {"z1"}, {"z1"}, {{{"z1", false}}, {{"z1", true}}});
    CHECK(check_claim(ClaimId::PROP2, cx).status == Status::Holds);
    CheckOptions rep;
    rep.variant = ReductionVariant::Repaired;
    auto bad = check_claim(ClaimId::PROP2, cx, rep);
    CHECK(bad.status == Status::Fails);
    CHECK_FALSE(bad.solver.empty());
    CHECK_FALSE(bad.oracle.empty());
    CHECK(check_claim(ClaimId::THM3_DIST, cx, rep).status == Status::Holds);
    CheckOptions lit;
    lit.variant = ReductionVariant::Literal;
    CHECK(check_claim(ClaimId::THM3_DIST, cx, lit).status == Status::Fails);
    CHECK(check_claim(ClaimId::PROP3, cx).status == Status::Holds);

    MinsatInstance unsat{cnf({"x1"}, {{{"x1", false}}, {{"x1", true}}}), "x1"};
    CHECK(check_claim(ClaimId::PROP4, unsat, rep).status == Status::Holds);
    CHECK(check_claim(ClaimId::PROP4, unsat, lit).status == Status::Fails);
    MinsatInstance unit{cnf({"x1"}, {{{"x1", false}}}), "x1"};
    CHECK(check_claim(ClaimId::THM5_NOEVEN, unit, rep).status == Status::Holds);
    CHECK(check_claim(ClaimId::THM5_NOEVEN, unit, lit).status == Status::Fails);
    CHECK(check_claim(ClaimId::THM6_DIST, unit, rep).status == Status::Holds);

    Framework chain({"a", "b"}, {{"a", "b"}});
    CHECK(check_claim(ClaimId::LATTICE, chain).status == Status::Holds);
    CHECK(check_claim(ClaimId::NONEMPTY, chain).status == Status::Holds);
    CHECK(check_claim(ClaimId::STB_COLLAPSE, chain).status == Status::Holds);
    Framework odd({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(check_claim(ClaimId::STB_COLLAPSE, odd).status == Status::Holds);

    // family kind mismatches
    CHECK_THROWS_AS((void)check_claim(ClaimId::PROP4, running_example()), UsageError);
    CHECK_THROWS_AS((void)check_claim(ClaimId::PROP1, unit), UsageError);
    CHECK_THROWS_AS((void)check_claim(ClaimId::PROP1, chain), UsageError);
    CHECK(check_claim(ClaimId::LEM1_2, running_example()).status == Status::Holds);
    CHECK_THROWS_AS((void)check_claim(ClaimId::LATTICE, running_example()), UsageError);
}

TEST_CASE("family runs account for every instance") {
    FamilyParams fp;
    fp.exhaustive_args = 2;
    auto lattice = run_family(ClaimId::LATTICE, fp);
    CHECK(lattice.claim == ClaimId::LATTICE);
    CHECK_FALSE(lattice.variant.has_value());
    CHECK(lattice.instances_checked == 16);
    CHECK(lattice.instances_skipped == 0);
    CHECK(lattice.holds);
    CHECK(lattice.counterexamples.empty());

    FamilyParams sampled;
    sampled.exhaustive = false;
    sampled.samples = 50;
    sampled.seed = 3;
    auto s = run_family(ClaimId::NONEMPTY, sampled);
    CHECK(s.instances_checked == 50);
    CHECK(s.holds);

    FamilyParams small;
    small.max_vars = 2;
    auto fam = enumerate_minsat(CnfFamilyParams{.max_vars = 2});
    auto p4 = run_family(ClaimId::PROP4, small);
    CHECK(p4.variant == ReductionVariant::Repaired);
    CHECK(p4.instances_checked == static_cast<int>(fam.size()));
    CHECK(p4.holds);

    FamilyParams qsample;
    qsample.exhaustive = false;
    qsample.samples = 30;
    qsample.seed = 7;
    auto t2 = run_family(ClaimId::THM2_DIST, qsample);
    CHECK(t2.instances_checked == 30);
    CHECK(t2.instances_skipped == 0);
    CHECK(t2.holds);
}

TEST_CASE("variant fan out") {
    FamilyParams fp;
    auto both = run_claim(ClaimId::PROP2, fp);
    REQUIRE(both.size() == 2);
    CHECK(both[0].variant == ReductionVariant::Literal);
    CHECK(both[1].variant == ReductionVariant::Repaired);
    CHECK(both[0].holds);
    CHECK_FALSE(both[1].holds);
    REQUIRE(!both[1].counterexamples.empty());
    CHECK(both[1].counterexamples.size() <= 5);
    CHECK(both[1].counterexamples[0].instance == "forall{} exists{z1} (z1) & (~z1)");
    CHECK(both[0].instances_checked == 1455);
    CHECK(both[1].instances_checked == 1455);

    FamilyParams lit;
    lit.variant = ReductionVariant::Literal;
    auto one = run_claim(ClaimId::PROP2, lit);
    REQUIRE(one.size() == 1);
    CHECK(one[0].variant == ReductionVariant::Literal);

    auto plain = run_claim(ClaimId::PROP3, fp);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].holds);
    CHECK(plain[0].instances_checked == 1455);
}

TEST_CASE("lemma one family runs in one pass") {
    FamilyParams fp;
    fp.max_y = 1;
    fp.max_z = 1;
    fp.max_clauses = 2;
    auto reports = run_lemma1_family(fp);
    REQUIRE(reports.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(reports[static_cast<std::size_t>(i)].claim ==
              static_cast<ClaimId>(static_cast<int>(ClaimId::LEM1_1) + i));
        CHECK(reports[static_cast<std::size_t>(i)].holds);
        CHECK(reports[static_cast<std::size_t>(i)].instances_checked ==
              reports[0].instances_checked);
    }
    CHECK(run_claim(ClaimId::LEM1_4, fp).size() == 1);
    CHECK(run_claim(ClaimId::LEM1_4, fp)[0].claim == ClaimId::LEM1_4);
}

TEST_CASE("report json shape") {
    FamilyParams fp;
    fp.exhaustive_args = 2;
    auto r = run_family(ClaimId::LATTICE, fp);
    nlohmann::json j = report_to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"claim", "counterexamples", "instances_checked",
                                           "instances_skipped", "params", "verdict"});
    CHECK(j["claim"] == "lattice");
    CHECK(j["verdict"] == "holds");
    std::vector<std::string> pkeys;
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it) pkeys.push_back(it.key());
    CHECK(pkeys == std::vector<std::string>{"exhaustive", "exhaustive_args", "max_args",
                                            "samples", "seed"});
    CHECK(report_to_json(r).dump(2) == j.dump(2));
    nlohmann::json timed = report_to_json(r, true);
    CHECK(timed.contains("wall_time_ms"));

    FamilyParams qp;
    qp.max_y = 1;
    qp.max_z = 1;
    qp.max_clauses = 2;
    auto p2 = run_claim(ClaimId::PROP2, qp);
    nlohmann::json lit = report_to_json(p2[0]);
    CHECK(lit["variant"] == "literal");
    std::vector<std::string> qkeys;
    for (auto it = lit["params"].begin(); it != lit["params"].end(); ++it)
        qkeys.push_back(it.key());
    CHECK(qkeys == std::vector<std::string>{"every_clause_touches_z", "exhaustive",
                                            "max_clauses", "max_width", "max_y", "max_z",
                                            "monotone", "samples", "seed"});
    CHECK(lit["params"]["monotone"] == true);
    CHECK(lit["params"]["every_clause_touches_z"] == true);

    auto rep = report_to_json(p2[1]);
    REQUIRE(rep["counterexamples"].is_array());
    if (!rep["counterexamples"].empty()) {
        const auto& ce = rep["counterexamples"][0];
        CHECK(ce.contains("instance"));
        CHECK(ce.contains("solver"));
        CHECK(ce.contains("oracle"));
    }

    FamilyParams mp;
    mp.max_vars = 2;
    auto p4 = run_family(ClaimId::PROP4, mp);
    nlohmann::json mj = report_to_json(p4);
    std::vector<std::string> mkeys;
    for (auto it = mj["params"].begin(); it != mj["params"].end(); ++it)
        mkeys.push_back(it.key());
    CHECK(mkeys == std::vector<std::string>{"exhaustive", "max_clauses", "max_vars",
                                            "max_width", "monotone", "samples", "seed"});
}

TEST_CASE("report table") {
    FamilyParams fp;
    fp.exhaustive_args = 2;
    std::vector<VerificationReport> rs = {run_family(ClaimId::LATTICE, fp)};
    std::string table = report_table(rs);
    CHECK(table.substr(0, 5) == "CLAIM");
    CHECK(table.find("VERDICT") != std::string::npos);
    CHECK(table.find("lattice") != std::string::npos);
    CHECK(table.find("holds") != std::string::npos);
    CHECK(table.find("16") != std::string::npos);
}
