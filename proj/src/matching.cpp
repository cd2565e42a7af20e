#include "edcs/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edcs {

void Matching::add(Edge e) {
    if (mate_[e.u] >= 0 || mate_[e.v] >= 0)
        throw std::invalid_argument("matching: endpoint already matched");
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
    edges_.push_back(e);
}

std::vector<Vertex> Matching::matched_vertices() const {
    std::vector<Vertex> out;
    out.reserve(2 * edges_.size());
    for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v)
        if (mate_[v] >= 0) out.push_back(v);
    return out;
}

Matching greedy_maximal_matching(const Graph& g, std::span<const std::size_t> order) {
    Matching m(g.vertex_count());
    for (std::size_t idx : order) {
        const Edge& e = g.edge(idx);
        if (!m.covers(e.u) && !m.covers(e.v)) m.add(e);
    }
    return m;
}

Matching greedy_maximal_matching(const Graph& g) {
    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return greedy_maximal_matching(g, order);
}

Matching hopcroft_karp(const Graph& g, const std::vector<int>& side) {
    const int n = g.vertex_count();
    if (static_cast<int>(side.size()) != n)
        throw std::invalid_argument("hopcroft_karp: side vector size mismatch");
    for (const auto& e : g.edges())
        if (side[e.u] == side[e.v])
            throw std::invalid_argument("hopcroft_karp: edge inside one color class");

    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<Vertex> mate(n, -1);
    std::vector<int> dist(n);
    std::vector<Vertex> queue;
    queue.reserve(n);

    auto bfs = [&]() {
        queue.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (side[v] != 0) continue;
            if (mate[v] < 0) {
                dist[v] = 0;
                queue.push_back(v);
            } else {
                dist[v] = kInf;
            }
        }
        bool found = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                Vertex next = mate[w];
                if (next < 0) {
                    found = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, Vertex u) -> bool {
        for (Vertex w : g.neighbors(u)) {
            Vertex next = mate[w];
            if (next < 0 || (dist[next] == dist[u] + 1 && self(self, next))) {
                mate[u] = w;
                mate[w] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs()) {
        for (Vertex v = 0; v < n; ++v)
            if (side[v] == 0 && mate[v] < 0) dfs(dfs, v);
    }

    Matching m(n);
    for (Vertex v = 0; v < n; ++v)
        if (side[v] == 0 && mate[v] >= 0) m.add(Edge(v, mate[v]));
    return m;
}

bool is_matching(const Graph& g, const Matching& m) {
    if (m.vertex_count() != g.vertex_count()) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& e : m.edges()) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

bool is_cover(const Graph& g, const VertexCover& c) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : c) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in[v] = 1;
    }
    for (const auto& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

bool check_duality(const Matching& m, const VertexCover& c, double alpha) {
    return alpha * static_cast<double>(m.size()) + 1e-9 >= static_cast<double>(c.size());
}

double vizing_lower_bound(int max_degree, double gamma, std::int64_t v_high_count) {
    if (v_high_count <= 0) return 0.0;
    return gamma * max_degree * static_cast<double>(v_high_count) / (2.0 * (max_degree + 1));
}

VertexCover normalize_cover(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

} // namespace edcs
