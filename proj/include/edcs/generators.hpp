#pragma once

#include "edcs/graph.hpp"
#include "edcs/rng.hpp"

#include <vector>

namespace edcs {

// Erdos-Renyi G(n, p).
Graph gen_random_graph(int n, double p, Rng& rng);

// Random bipartite graph: left vertices [0, n_left), right [n_left,
// n_left + n_right), each cross pair kept with probability p.
Graph gen_random_bipartite(int n_left, int n_right, double p, Rng& rng);

// Exactly d-regular graph built from d/2 distinct random circulant offsets
// (plus the antipodal matching when d is odd and n is even), then a random
// vertex relabeling. Requires 0 <= d < n and n*d even.
Graph gen_regular_ish(int n, int d, Rng& rng);

// Left/right side of a bipartite graph: side[v] in {0, 1}.
std::vector<int> bipartite_sides(int n_left, int n_right);

enum class LowerboundLayer : unsigned char { L1, L2, R1, R2 };

struct LowerboundGraph {
    Graph graph;
    std::vector<int> side;                   // 0 = left (L1,L2), 1 = right (R1,R2)
    std::vector<LowerboundLayer> layer;      // per-vertex layer label
    int matching_size = 0;                   // maximum matching value (= n)
};

// Hard instance for per-part maximum-matching coresets: layers L1, L2, R1,
// R2 with |L1| = n/2 + n/k and |L2| = |R1| = |R2| = n/2; complete bipartite
// L1 x R2, a perfect matching L2-R2, and a matching of size |R1| between L1
// and R1. Requires n divisible by 2k.
LowerboundGraph gen_lowerbound_graph(int n, int k);

} // namespace edcs
