#include "edcs/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edcs {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range: " +
                                        std::to_string(e.u) + " " + std::to_string(e.v));
        if (e.u == e.v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
        throw std::invalid_argument("graph: duplicate edge " + std::to_string(it->u) + " " +
                                    std::to_string(it->v));

    std::vector<std::size_t> deg(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(2 * edges_.size());
    inc_.resize(2 * edges_.size());
    std::vector<std::size_t> pos(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adj_[pos[e.u]] = e.v;
        inc_[pos[e.u]++] = i;
        adj_[pos[e.v]] = e.u;
        inc_[pos[e.v]++] = i;
    }
    // Edges are sorted, so rows of the smaller endpoint come out sorted; rows
    // of the larger endpoint need a sort for binary search in has_edge.
    for (int v = 0; v < n_; ++v) {
        auto b = offsets_[v], e = offsets_[v + 1];
        std::vector<std::pair<Vertex, std::size_t>> row;
        row.reserve(e - b);
        for (auto i = b; i < e; ++i) row.emplace_back(adj_[i], inc_[i]);
        std::sort(row.begin(), row.end());
        for (std::size_t j = 0; j < row.size(); ++j) {
            adj_[b + j] = row[j].first;
            inc_[b + j] = row[j].second;
        }
        max_degree_ = std::max<int>(max_degree_, static_cast<int>(e - b));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), deg_(n, 0) {
    for (auto& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j] == edges[i]) ++j;
        edges_.push_back(edges[i]);
        counts_.push_back(static_cast<int>(j - i));
        deg_[edges[i].u] += static_cast<std::int64_t>(j - i);
        deg_[edges[i].v] += static_cast<std::int64_t>(j - i);
        total_ += static_cast<std::int64_t>(j - i);
        i = j;
    }
}

std::int64_t Multigraph::max_degree() const {
    std::int64_t d = 0;
    for (auto x : deg_) d = std::max(d, x);
    return d;
}

Graph Multigraph::dedup() const { return Graph(n_, edges_); }

Multigraph Multigraph::induced(const std::vector<char>& keep) const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[edges_[i].u] && keep[edges_[i].v])
            out.insert(out.end(), counts_[i], edges_[i]);
    return Multigraph(n_, std::move(out));
}

} // namespace edcs
