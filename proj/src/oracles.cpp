#include "edcs/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edcs {

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    if (const char* raw = std::getenv("EDCS_ORACLE_CAP")) {
        std::string s(raw);
        auto colon = s.find(':');
        try {
            if (colon == std::string::npos) {
                caps.max_vertices = caps.max_edges = std::stoi(s);
            } else {
                caps.max_vertices = std::stoi(s.substr(0, colon));
                caps.max_edges = std::stoi(s.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("EDCS_ORACLE_CAP: expected 'N' or 'N:M'");
        }
    }
    return caps;
}

namespace {

void check_caps(const Graph& g, const OracleCaps& caps) {
    if (g.vertex_count() <= caps.max_vertices) return;
    if (static_cast<int>(g.edge_count()) <= caps.max_edges) return;
    throw std::length_error("oracle too large");
}

// Bitmask DP over the non-isolated vertices.
int mm_bitmask(const Graph& g, const std::vector<Vertex>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) local[verts[i]] = i;
    std::vector<std::uint32_t> nbr(k, 0);
    for (const auto& e : g.edges()) {
        int a = local[e.u], b = local[e.v];
        nbr[a] |= std::uint32_t{1} << b;
        nbr[b] |= std::uint32_t{1} << a;
    }
    std::vector<signed char> memo(std::size_t{1} << k, -1);
    auto solve = [&](auto&& self, std::uint32_t mask) -> int {
        if (mask == 0) return 0;
        signed char& slot = memo[mask];
        if (slot >= 0) return slot;
        int v = __builtin_ctz(mask);
        std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        int best = self(self, rest); // leave v unmatched
        std::uint32_t cands = nbr[v] & rest;
        while (cands) {
            int w = __builtin_ctz(cands);
            cands &= cands - 1;
            best = std::max(best, 1 + self(self, rest & ~(std::uint32_t{1} << w)));
        }
        slot = static_cast<signed char>(best);
        return best;
    };
    return solve(solve, (std::uint32_t{1} << k) - 1);
}

// Branch and bound for instances with few edges but many vertices.
int mm_branch(const std::vector<Edge>& edges, std::vector<char>& used, std::size_t from,
              int current, int& best) {
    std::size_t i = from;
    while (i < edges.size() && (used[edges[i].u] || used[edges[i].v])) ++i;
    if (i == edges.size()) {
        best = std::max(best, current);
        return best;
    }
    int remaining = static_cast<int>(edges.size() - i);
    if (current + remaining <= best) return best; // cannot beat best
    const Edge& e = edges[i];
    used[e.u] = used[e.v] = 1;
    mm_branch(edges, used, i + 1, current + 1, best);
    used[e.u] = used[e.v] = 0;
    mm_branch(edges, used, i + 1, current, best);
    return best;
}

void vc_branch(const std::vector<Edge>& edges, std::vector<char>& in_cover, std::size_t from,
               int current, std::vector<char>& best_cover, int& best) {
    if (current >= best) return;
    std::size_t i = from;
    while (i < edges.size() && (in_cover[edges[i].u] || in_cover[edges[i].v])) ++i;
    if (i == edges.size()) {
        best = current;
        best_cover = in_cover;
        return;
    }
    const Edge& e = edges[i];
    in_cover[e.u] = 1;
    vc_branch(edges, in_cover, i + 1, current + 1, best_cover, best);
    in_cover[e.u] = 0;
    in_cover[e.v] = 1;
    vc_branch(edges, in_cover, i + 1, current + 1, best_cover, best);
    in_cover[e.v] = 0;
}

} // namespace

int exact_mm_bruteforce(const Graph& g, OracleCaps caps) {
    check_caps(g, caps);
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) verts.push_back(v);
    if (verts.empty()) return 0;
    if (verts.size() <= 24) return mm_bitmask(g, verts);
    std::vector<char> used(g.vertex_count(), 0);
    int best = 0;
    for (const auto& e : g.edges()) // greedy warm start tightens pruning
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            ++best;
        }
    std::fill(used.begin(), used.end(), 0);
    mm_branch(g.edges(), used, 0, 0, best);
    return best;
}

Matching exact_mm_matching(const Graph& g, OracleCaps caps) {
    Matching m(g.vertex_count());
    int target = exact_mm_bruteforce(g, caps);
    if (target == 0) return m;
    // Fix edges one at a time, keeping the optimum reachable; lexicographic
    // edge order makes the result unique.
    std::vector<char> used(g.vertex_count(), 0);
    while (static_cast<int>(m.size()) < target) {
        for (const auto& e : g.edges()) {
            if (used[e.u] || used[e.v]) continue;
            std::vector<Edge> rest;
            for (const auto& f : g.edges())
                if (!used[f.u] && !used[f.v] && f.u != e.u && f.u != e.v && f.v != e.u &&
                    f.v != e.v)
                    rest.push_back(f);
            Graph residual(g.vertex_count(), std::move(rest));
            if (1 + exact_mm_bruteforce(residual, caps) + static_cast<int>(m.size()) == target) {
                m.add(e);
                used[e.u] = used[e.v] = 1;
                break;
            }
        }
    }
    return m;
}

VertexCover exact_vc_bruteforce(const Graph& g, OracleCaps caps) {
    check_caps(g, caps);
    std::vector<char> in_cover(g.vertex_count(), 0);
    std::vector<char> best_cover(g.vertex_count(), 0);
    int best = g.vertex_count() + 1;
    // Greedy warm start tightens the bound: take both endpoints of a maximal
    // matching.
    {
        std::vector<char> greedy(g.vertex_count(), 0);
        int size = 0;
        for (const auto& e : g.edges())
            if (!greedy[e.u] && !greedy[e.v]) {
                greedy[e.u] = greedy[e.v] = 1;
                size += 2;
            }
        best = size + 1;
        best_cover = greedy;
    }
    vc_branch(g.edges(), in_cover, 0, 0, best_cover, best);
    VertexCover out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (best_cover[v]) out.push_back(v);
    return out;
}

} // namespace edcs
