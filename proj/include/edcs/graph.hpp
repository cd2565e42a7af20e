#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace edcs {

using Vertex = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on dense vertex ids [0, n). Immutable after
// construction; adjacency is CSR with sorted neighbor rows.
class Graph {
public:
    Graph() = default;

    // Canonicalizes (u < v), sorts, and validates: endpoints in range, no
    // self-loops, no duplicates. Throws std::invalid_argument otherwise.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    int max_degree() const { return max_degree_; }

    bool has_edge(Vertex u, Vertex v) const;

    // Index into edges() of the incident edges of v.
    std::span<const std::size_t> incident_edges(Vertex v) const {
        return {inc_.data() + offsets_[v], inc_.data() + offsets_[v + 1]};
    }

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
    std::vector<std::size_t> inc_;
};

// Undirected multigraph: same support operations as Graph but edges carry
// multiplicities and degrees count them.
class Multigraph {
public:
    Multigraph() = default;
    // Counts repeated occurrences in `edges` as multiplicity.
    Multigraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t support_size() const { return edges_.size(); }
    std::int64_t total_multiplicity() const { return total_; }
    const std::vector<Edge>& support() const { return edges_; }
    int multiplicity(std::size_t i) const { return counts_[i]; }
    std::int64_t degree(Vertex v) const { return deg_[v]; }
    std::int64_t max_degree() const;

    // Distinct-edge graph with the same support.
    Graph dedup() const;

    // Induced sub-multigraph on the vertices with keep[v] != 0.
    Multigraph induced(const std::vector<char>& keep) const;

private:
    int n_ = 0;
    std::int64_t total_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> counts_;
    std::vector<std::int64_t> deg_;
};

} // namespace edcs
