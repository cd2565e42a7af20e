#pragma once

#include "edcs/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace edcs {

// A set of vertex-disjoint edges plus the matched-vertex index (mate array,
// -1 for unmatched).
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : mate_(n, -1) {}

    void add(Edge e);
    bool covers(Vertex v) const { return mate_[v] >= 0; }
    Vertex mate(Vertex v) const { return mate_[v]; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(mate_.size()); }

    // Vertices touched by the matching, sorted.
    std::vector<Vertex> matched_vertices() const;

private:
    std::vector<Edge> edges_;
    std::vector<Vertex> mate_;
};

using VertexCover = std::vector<Vertex>; // sorted, duplicate-free

// Scans edges in the given order (indices into g.edges()) and keeps every
// edge whose endpoints are both free. The explicit order makes adversarial
// greedy choices reproducible.
Matching greedy_maximal_matching(const Graph& g, std::span<const std::size_t> order);
Matching greedy_maximal_matching(const Graph& g);

// Maximum-cardinality bipartite matching. side[v] in {0,1} must be a proper
// 2-coloring of g; an edge inside one color class is rejected.
Matching hopcroft_karp(const Graph& g, const std::vector<int>& side);

bool is_matching(const Graph& g, const Matching& m);
bool is_cover(const Graph& g, const VertexCover& c);

// True iff alpha * |m| >= |c|; with m a matching and c a cover of the same
// graph this certifies both are alpha-approximate.
bool check_duality(const Matching& m, const VertexCover& c, double alpha);

// gamma*Delta*|V_high| / (2*(Delta+1)): a floor on MM(G) when V_high are the
// vertices of degree >= gamma*Delta.
double vizing_lower_bound(int max_degree, double gamma, std::int64_t v_high_count);

VertexCover normalize_cover(std::vector<Vertex> vertices);

} // namespace edcs
