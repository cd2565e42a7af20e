#pragma once

#include "edcs/graph.hpp"
#include "edcs/rng.hpp"

#include <vector>

namespace edcs {

// Assignment of every host edge to exactly one of k parts. part_of is
// aligned with host.edges().
struct Partition {
    int k = 0;
    std::vector<int> part_of;

    std::vector<std::size_t> part_sizes() const {
        std::vector<std::size_t> s(k, 0);
        for (int p : part_of) ++s[p];
        return s;
    }
};

// Keeps each edge independently with probability p. One uniform draw per
// edge in canonical edge order, so coupled seeds give nested edge sets for
// nested probabilities.
Graph edge_sample(const Graph& g, double p, Rng& rng);

struct VertexSample {
    Graph graph;              // induced subgraph, same vertex id space
    std::vector<char> kept;   // kept[v] != 0 iff v was sampled
};

// Samples each vertex independently with probability p and keeps the edges
// with both endpoints sampled.
VertexSample vertex_sample(const Graph& g, double p, Rng& rng);

// Independent uniform assignment of each edge to one of k parts. k == 0 is
// rejected.
Partition random_k_partition(const Graph& g, int k, Rng& rng);

// Materializes part i of a partition as a Graph on the host vertex set.
Graph part_graph(const Graph& host, const Partition& part, int i);

} // namespace edcs
