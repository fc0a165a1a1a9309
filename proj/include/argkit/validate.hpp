#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "argkit/framework.hpp"
#include "argkit/logic.hpp"
#include "argkit/reductions.hpp"

#include "json.hpp"

namespace argkit {

// Every checkable statement, one checking procedure each. The lem1_* ids are
// the five numbered items; lattice / nonempty / stb_collapse are the general
// semantics facts checked over framework families.
enum class ClaimId {
    LEM1_1,
    LEM1_2,
    LEM1_3,
    LEM1_4,
    LEM1_5,
    PROP1,
    PROP2,
    PROP3,
    PROP4,
    PROP5,
    THM1_DIST,
    THM2_DIST,
    THM3_DIST,
    THM4_DIST,
    THM5_NOEVEN,
    THM6_DIST,
    THM7_DIST,
    THM8_DIST,
    LATTICE,
    NONEMPTY,
    STB_COLLAPSE,
};

std::string to_string(ClaimId c);
ClaimId claim_from_string(std::string_view s);
const std::vector<ClaimId>& all_claims();

enum class FamilyKind { Qbf, Minsat, Frameworks };

struct ClaimInfo {
    FamilyKind kind;
    bool monotone = false;         // formula generator restriction
    bool touches_z = false;        // every clause touches an existential var
    int reduction_id = 0;          // 0 when no reduction is involved
    bool variant_relevant = false; // reductions 3 and 5 have two variants
    ReductionVariant default_variant = ReductionVariant::Literal;
};

ClaimInfo claim_info(ClaimId c);

// Generator bounds plus execution knobs. Only the fields matching the claim's
// family kind are consulted; the rest keep their defaults.
struct FamilyParams {
    int max_y = 2;
    int max_z = 2;
    int max_clauses = 3;
    int max_width = 3;
    int max_vars = 3;       // minsat families
    int exhaustive_args = 3; // framework families: enumerate all digraphs this size
    int max_args = 8;        // framework families: random size cap
    std::uint64_t seed = 1;
    int samples = 0;        // number of random draws when not exhaustive
    bool exhaustive = true;
    std::optional<ReductionVariant> variant;
    int exact_distance_max_args = 14;
    int counterexample_cap = 5;
};

struct Counterexample {
    std::string instance;
    std::string solver;
    std::string oracle;
};

struct VerificationReport {
    ClaimId claim;
    std::optional<ReductionVariant> variant; // set for variant-relevant claims
    FamilyParams params;
    int instances_checked = 0;
    int instances_skipped = 0;
    bool holds = false;
    std::vector<Counterexample> counterexamples;
    std::int64_t wall_time_ms = 0;
};

// One instance, one verdict. Capacity overruns are skips, never verdicts.
struct InstanceOutcome {
    enum class Status { Holds, Fails, Skipped };
    Status status = Status::Holds;
    std::string solver;
    std::string oracle;
};

struct CheckOptions {
    ReductionVariant variant = ReductionVariant::Literal;
    int exact_distance_max_args = 14;
};

InstanceOutcome check_claim(ClaimId c, const Qbf2Formula& phi, const CheckOptions& opt = {});
InstanceOutcome check_claim(ClaimId c, const MinsatInstance& inst, const CheckOptions& opt = {});
InstanceOutcome check_claim(ClaimId c, const Framework& f);

// All five numbered items checked in one enumeration pass over adm/prf of the
// reduction-1 framework.
struct Lemma1Verdict {
    std::array<bool, 5> item{};
    std::array<std::string, 5> detail{}; // failure description, empty when the item holds
    bool all() const;
};

Lemma1Verdict check_lemma1(const Qbf2Formula& phi);

// Framework instance families. all_frameworks enumerates every attack
// relation on n named arguments (2^(n*n) frameworks, canonical order);
// random_framework draws the size, an edge density from {0.1, 0.25, 0.5} and
// then each edge independently, all from explicit modulo draws so the stream
// is identical across platforms.
std::vector<Framework> all_frameworks(int n);
Framework random_framework(std::mt19937_64& g, int max_args);

// Checks the claim over the whole generated family, in canonical order,
// deterministic given params. Uses params.variant when set, otherwise the
// claim's default variant.
VerificationReport run_family(ClaimId c, const FamilyParams& params);

// All five lemma-1 item reports from a single pass over the family.
std::vector<VerificationReport> run_lemma1_family(const FamilyParams& params);

// Reports for a claim the way the CLI runs it: variant-relevant claims with
// no explicit variant yield both variants' reports, side by side.
std::vector<VerificationReport> run_claim(ClaimId c, const FamilyParams& params);

// wall_time_ms is emitted only when include_timing is set, so that identical
// invocations stay byte-identical.
nlohmann::json report_to_json(const VerificationReport& r, bool include_timing = false);
std::string report_table(const std::vector<VerificationReport>& reports);

} // namespace argkit
