#pragma once

#include <string>
#include <string_view>

#include "argkit/framework.hpp"
#include "argkit/logic.hpp"
#include "argkit/reductions.hpp"

namespace argkit {

// AF exchange text made of `arg(NAME).` and `att(A,B).` statements with `%`
// comments. Attacks may appear before the declarations they reference, but
// every endpoint must be declared somewhere in the file.
Framework parse_apx(std::string_view text);

// Canonical form: arg lines in framework order, then att lines sorted by the
// name pair. parse_apx(emit_apx(f)) == f.
std::string emit_apx(const Framework& f);

// Trivial graph format: one node per line (first token is the id, the rest is
// an ignored label), `#`, then edges as id pairs. The separator may be absent
// for a node-only graph.
Framework parse_tgf(std::string_view text);

// Strict prenex 2QBF: `p cnf` header, at most one `a` line followed by at
// most one `e` line (each 0-terminated), then exactly the announced number of
// clause lines. Every declared variable must be quantified exactly once.
// Variable names in the result are the decimal index strings.
Qbf2Formula parse_qdimacs(std::string_view text);

// Plain DIMACS CNF with the same clause-line rules.
CnfFormula parse_dimacs(std::string_view text);

std::string to_qdimacs(const Qbf2Formula& f);
std::string to_dimacs(const CnfFormula& f);

// "[a,b,c]", member names in argument order.
std::string format_extension(const Framework& f, const ArgSet& s);

// JSON sidecar describing a reduction artifact.
std::string artifact_meta_json(const ReductionArtifact& art);

} // namespace argkit
