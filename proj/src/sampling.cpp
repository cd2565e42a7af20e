#include "edcs/sampling.hpp"

#include <stdexcept>

namespace edcs {

Graph edge_sample(const Graph& g, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge_sample: p outside [0,1]");
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (rng.next_double() < p) kept.push_back(e);
    return Graph(g.vertex_count(), std::move(kept));
}

VertexSample vertex_sample(const Graph& g, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("vertex_sample: p outside [0,1]");
    std::vector<char> kept(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) kept[v] = rng.next_double() < p ? 1 : 0;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (kept[e.u] && kept[e.v]) edges.push_back(e);
    return {Graph(g.vertex_count(), std::move(edges)), std::move(kept)};
}

Partition random_k_partition(const Graph& g, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("random_k_partition: k must be >= 1");
    Partition part;
    part.k = k;
    part.part_of.resize(g.edge_count());
    for (auto& p : part.part_of) p = static_cast<int>(rng.next_below(k));
    return part;
}

Graph part_graph(const Graph& host, const Partition& part, int i) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < host.edge_count(); ++e)
        if (part.part_of[e] == i) edges.push_back(host.edge(e));
    return Graph(host.vertex_count(), std::move(edges));
}

} // namespace edcs
