#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "argkit/framework.hpp"
#include "argkit/graph_classes.hpp"
#include "argkit/logic.hpp"

namespace argkit {

// `Literal` builds exactly the printed attack relation. `Repaired` applies the
// documented fix-ups for constructions whose printed text does not support
// their own structural claims; it exists only for reductions 3 and 5.
enum class ReductionVariant { Literal, Repaired };

std::string to_string(ReductionVariant v);
ReductionVariant variant_from_string(std::string_view s);

struct ReductionClaim {
    GraphClassId cls;
    ArgSet deletion_set;
    // Checked at construction. Recorded rather than enforced, so that failing
    // literal variants can still be built and studied.
    bool verified = false;
};

struct ReductionArtifact {
    Framework framework;
    int reduction_id;
    ReductionVariant variant;
    std::map<std::string, std::string> query_args;
    ReductionClaim claim;
    std::optional<ReductionClaim> extra_claim;
    std::string source_text;
};

// Naming: specials keep their text names (phi, phi_bar, phi_p, phi_n, b,
// b_bar, g, q, u, v); variable x gets arguments x and nx; universal y
// additionally y_p and ny_p; clauses are c1.. in input order (positive c1..,
// negative nc1.. for the monotone constructions); witness arguments are E1..
// A name collision with an input variable is a UsageError.

// Monotone input. Claims BIP with deletion set {phi}.
ReductionArtifact reduce1(const Qbf2Formula& phi);

// Claims SYM with {phi, b}.
ReductionArtifact reduce2(const Qbf2Formula& phi);

// Monotone input. Claims BIP with {g}. The repaired variant redirects the
// negative-clause attacks from phi_p to phi_n, the minimal change that makes
// the deletion claim hold; the literal text leaves phi_n isolated.
ReductionArtifact reduce3(const Qbf2Formula& phi,
                          ReductionVariant variant = ReductionVariant::Literal);

// Claims SYM with {phi, g}.
ReductionArtifact reduce4(const Qbf2Formula& phi);

// Claims ACY with {b} plus NOEVEN with the empty set. The repaired variant
// (default) makes variable attacks one-directional (nx -> x) and removes q,
// E_c from E_c's targets; the literal variant keeps the printed mutual
// variable attacks and self-attacking witnesses.
ReductionArtifact reduce5(const MinsatInstance& inst,
                          ReductionVariant variant = ReductionVariant::Repaired);

// Claims SYM with {u, v, b, phi}; additionally BIP with the same set when the
// input is monotone.
ReductionArtifact reduce6(const Qbf2Formula& phi);

} // namespace argkit
