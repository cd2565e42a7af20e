#include "edcs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edcs {

Graph gen_random_graph(int n, double p, Rng& rng) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random_graph: bad parameters");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_random_bipartite(int n_left, int n_right, double p, Rng& rng) {
    if (n_left < 0 || n_right < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_random_bipartite: bad parameters");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_left; ++u)
        for (Vertex v = 0; v < n_right; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, static_cast<Vertex>(n_left + v));
    return Graph(n_left + n_right, std::move(edges));
}

std::vector<int> bipartite_sides(int n_left, int n_right) {
    std::vector<int> side(n_left + n_right, 0);
    for (int v = n_left; v < n_left + n_right; ++v) side[v] = 1;
    return side;
}

Graph gen_regular_ish(int n, int d, Rng& rng) {
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw std::invalid_argument("gen_regular_ish: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_regular_ish: n*d must be even");
    if (n == 0 || d == 0) return Graph(n, {});

    // Offsets 1..floor((n-1)/2) each contribute degree 2; the antipodal
    // offset n/2 (n even) contributes degree 1.
    int half_offsets = (n - 1) / 2;
    int full_needed = d / 2;
    bool need_antipodal = (d % 2 == 1);
    if (full_needed > half_offsets)
        throw std::invalid_argument("gen_regular_ish: degree too large for offset construction");

    std::vector<int> offsets(half_offsets);
    std::iota(offsets.begin(), offsets.end(), 1);
    for (int i = half_offsets - 1; i > 0; --i)
        std::swap(offsets[i], offsets[rng.next_below(i + 1)]);
    offsets.resize(full_needed);

    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(relabel[i], relabel[rng.next_below(i + 1)]);

    std::vector<Edge> edges;
    for (int off : offsets)
        for (int v = 0; v < n; ++v) {
            int w = (v + off) % n;
            if (relabel[v] != relabel[w]) edges.emplace_back(relabel[v], relabel[w]);
        }
    if (need_antipodal)
        for (int v = 0; v < n / 2; ++v) edges.emplace_back(relabel[v], relabel[v + n / 2]);
    // Each unordered pair appears exactly once across distinct offsets.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

LowerboundGraph gen_lowerbound_graph(int n, int k) {
    if (k < 1 || n < 2 * k || n % (2 * k) != 0)
        throw std::invalid_argument("gen_lowerbound_graph: n must be a positive multiple of 2k");
    const int half = n / 2;
    const int l1 = half + n / k;
    // Vertex layout: L1 [0,l1), L2 [l1,l1+half), R1 [l1+half, l1+2*half),
    // R2 [l1+2*half, l1+3*half).
    const int l2_base = l1;
    const int r1_base = l1 + half;
    const int r2_base = l1 + 2 * half;
    const int total = l1 + 3 * half;

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(l1) * half + 2 * half);
    for (int a = 0; a < l1; ++a)
        for (int b = 0; b < half; ++b) edges.emplace_back(a, r2_base + b);
    for (int i = 0; i < half; ++i) edges.emplace_back(l2_base + i, r2_base + i);
    for (int i = 0; i < half; ++i) edges.emplace_back(i, r1_base + i);

    LowerboundGraph out;
    out.graph = Graph(total, std::move(edges));
    out.side.assign(total, 0);
    out.layer.assign(total, LowerboundLayer::L1);
    for (int v = l2_base; v < r1_base; ++v) out.layer[v] = LowerboundLayer::L2;
    for (int v = r1_base; v < r2_base; ++v) {
        out.layer[v] = LowerboundLayer::R1;
        out.side[v] = 1;
    }
    for (int v = r2_base; v < total; ++v) {
        out.layer[v] = LowerboundLayer::R2;
        out.side[v] = 1;
    }
    out.matching_size = n;
    return out;
}

} // namespace edcs
