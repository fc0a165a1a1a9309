#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "argkit/framework.hpp"

namespace argkit {

enum class GraphClassId { ACY, NOEVEN, BIP, SYM };

std::string to_string(GraphClassId g);
GraphClassId graph_class_from_string(std::string_view s);
const std::vector<GraphClassId>& all_graph_classes();

struct CycleEnumerationOptions {
    long max_cycles = 1'000'000;
};

// All simple directed cycles as vertex index sequences. Each cycle starts at
// its minimal vertex; cycles are emitted grouped by that root in ascending
// order, self-loop first within a root. Self-loops are length-1 cycles [v].
std::vector<std::vector<int>> simple_cycles(const Framework& f,
                                            const CycleEnumerationOptions& opts = {});

// Class conventions: ACY = no directed cycle (self-loops count); NOEVEN = no
// simple directed cycle of even length, 2-cycles included; BIP = underlying
// undirected graph is 2-colorable (any self-attack disqualifies); SYM =
// symmetric and irreflexive attack relation.
bool is_member(const Framework& f, GraphClassId g, const CycleEnumerationOptions& opts = {});

// Alternate NOEVEN convention that does not count 2-cycles (reported by the
// CLI as an extra datum, never used for distances).
bool is_member_noeven_ignoring_2cycles(const Framework& f,
                                       const CycleEnumerationOptions& opts = {});

struct DistanceOptions {
    long max_subset_checks = 5'000'000;
    CycleEnumerationOptions cycles{};
};

struct DistanceCertificate {
    GraphClassId cls;
    int k;
    ArgSet deletion_set;
};

// Smallest vertex deletion set whose removal puts f into g, found by
// iterating k = 0,1,2,... over index subsets in lexicographic order, so the
// certificate is the lexicographically least among minimum-size sets. A
// greedy pass (repeatedly deleting the highest-degree vertex) bounds the
// search; when the subset budget runs out a CapacityError is thrown carrying
// the greedy upper bound in best_bound.
DistanceCertificate distance(const Framework& f, GraphClassId g,
                             const DistanceOptions& opts = {});

bool verify_deletion(const Framework& f, GraphClassId g, const ArgSet& deleted,
                     const CycleEnumerationOptions& opts = {});

} // namespace argkit
