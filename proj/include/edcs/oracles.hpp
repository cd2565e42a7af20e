#pragma once

#include "edcs/graph.hpp"
#include "edcs/matching.hpp"

namespace edcs {

// Size limits for the exponential-time oracles. The EDCS_ORACLE_CAP
// environment variable ("N" or "N:M") overrides both limits at load time.
struct OracleCaps {
    int max_vertices = 20;
    int max_edges = 40;

    static OracleCaps from_env();
};

// Exact maximum matching size by branch and bound over vertices, with a
// bitmask memo on small instances. Ties broken by lexicographic edge order.
// Throws std::length_error("oracle too large") past the caps.
int exact_mm_bruteforce(const Graph& g, OracleCaps caps = OracleCaps::from_env());

// Exact minimum vertex cover (branch on an uncovered edge), same caps and
// deterministic tie-breaking.
VertexCover exact_vc_bruteforce(const Graph& g, OracleCaps caps = OracleCaps::from_env());

// Maximum matching as an edge set, size equal to exact_mm_bruteforce. Edges
// chosen lexicographically among the optimal matchings.
Matching exact_mm_matching(const Graph& g, OracleCaps caps = OracleCaps::from_env());

} // namespace edcs
