#include "edcs/edcs.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace edcs {

EdcsParams::EdcsParams(std::int64_t b, std::int64_t bm) : beta(b), beta_minus(bm) {
    if (!(beta > beta_minus && beta_minus >= 0))
        throw std::invalid_argument("edcs params: need beta > beta_minus >= 0");
}

Edcs::Edcs(const Graph& host, EdcsParams params)
    : host_(&host), params_(params), in_h_(host.edge_count(), 0), deg_(host.vertex_count(), 0) {}

Edcs::Edcs(const Graph& host, EdcsParams params, std::vector<char> membership)
    : host_(&host), params_(params), in_h_(std::move(membership)), deg_(host.vertex_count(), 0) {
    if (in_h_.size() != host.edge_count())
        throw std::invalid_argument("edcs: membership size mismatch");
    for (std::size_t i = 0; i < in_h_.size(); ++i)
        if (in_h_[i]) {
            ++deg_[host.edge(i).u];
            ++deg_[host.edge(i).v];
            ++size_;
        }
}

std::vector<Edge> Edcs::edge_list() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < in_h_.size(); ++i)
        if (in_h_[i]) out.push_back(host_->edge(i));
    return out;
}

Graph Edcs::subgraph() const { return Graph(host_->vertex_count(), edge_list()); }

bool FixTrace::phi_strictly_increasing() const {
    for (std::size_t i = 1; i < phi2.size(); ++i)
        if (phi2[i] <= phi2[i - 1]) return false;
    return true;
}

bool FixTrace::steps_within_bound(int n, std::int64_t beta) const {
    const __int128 bound = __int128{2} * n * beta * beta;
    return static_cast<__int128>(steps) <= bound;
}

namespace {

// Mutable construction state. Degrees, the doubled potential, and the
// violation worklists are maintained incrementally.
struct FixState {
    const Graph& g;
    EdcsParams params;
    std::vector<char> in_h;
    std::vector<int> deg;
    std::int64_t sum_deg = 0;  // sum of subgraph degrees
    std::int64_t edge_sum = 0; // sum over H-edges of endpoint degree sums
    bool p1_possible;
    bool p2_possible;

    FixState(const Graph& graph, EdcsParams p, std::vector<char> start)
        : g(graph), params(p), in_h(std::move(start)), deg(graph.vertex_count(), 0) {
        for (std::size_t i = 0; i < in_h.size(); ++i)
            if (in_h[i]) {
                ++deg[g.edge(i).u];
                ++deg[g.edge(i).v];
            }
        for (std::size_t i = 0; i < in_h.size(); ++i)
            if (in_h[i]) edge_sum += deg[g.edge(i).u] + deg[g.edge(i).v];
        for (int v = 0; v < g.vertex_count(); ++v) sum_deg += deg[v];
        // Degree sums never exceed 2(n-1); if beta is at least that, P1 can
        // never fire, and with beta_minus == 0, P2 can never fire.
        p1_possible = params.beta < 2 * (std::int64_t{g.vertex_count()} - 1);
        p2_possible = params.beta_minus > 0;
    }

    std::int64_t phi2() const { return (2 * params.beta - 1) * sum_deg - 2 * edge_sum; }

    std::int64_t degree_sum(std::size_t i) const {
        const Edge& e = g.edge(i);
        return std::int64_t{deg[e.u]} + deg[e.v];
    }

    bool violates(std::size_t i) const {
        const std::int64_t s = degree_sum(i);
        return in_h[i] ? s > params.beta : s < params.beta_minus;
    }

    // Fixes a known-violating edge; returns false if the edge turned out
    // clean (stale worklist entry).
    bool fix(std::size_t i) {
        const Edge& e = g.edge(i);
        const std::int64_t s = degree_sum(i);
        if (in_h[i] && s > params.beta) {
            in_h[i] = 0;
            edge_sum -= 2 * s - 2;
            sum_deg -= 2;
            --deg[e.u];
            --deg[e.v];
            return true;
        }
        if (!in_h[i] && s < params.beta_minus) {
            in_h[i] = 1;
            edge_sum += 2 * s + 2;
            sum_deg += 2;
            ++deg[e.u];
            ++deg[e.v];
            return true;
        }
        return false;
    }
};

class DirtyQueueScan {
public:
    DirtyQueueScan(FixState& st) : st_(st), queued_(st.g.edge_count(), 0) {
        for (std::size_t i = 0; i < st_.g.edge_count(); ++i)
            if (st_.violates(i)) push(i);
    }

    std::optional<std::size_t> pop() {
        while (!p1_.empty() || !p2_.empty()) {
            std::size_t i;
            if (!p1_.empty()) {
                i = p1_.front();
                p1_.pop_front();
            } else {
                i = p2_.front();
                p2_.pop_front();
            }
            queued_[i] = 0;
            if (st_.violates(i)) return i;
        }
        return std::nullopt;
    }

    // After fixing edge `i`, only one violation direction can newly appear
    // around each endpoint: P1 after an addition, P2 after a removal.
    void touch(std::size_t fixed, bool was_added) {
        if (was_added ? !st_.p1_possible : !st_.p2_possible) return;
        const Edge& e = st_.g.edge(fixed);
        for (Vertex v : {e.u, e.v})
            for (std::size_t j : st_.g.incident_edges(v)) {
                if (queued_[j] || st_.in_h[j] != (was_added ? 1 : 0)) continue;
                if (st_.violates(j)) push(j);
            }
    }

private:
    void push(std::size_t i) {
        queued_[i] = 1;
        (st_.in_h[i] ? p1_ : p2_).push_back(i);
    }

    FixState& st_;
    std::vector<char> queued_;
    std::deque<std::size_t> p1_;
    std::deque<std::size_t> p2_;
};

class RandomScanOrder {
public:
    RandomScanOrder(FixState& st, Rng& rng) : st_(st), rng_(rng), queued_(st.g.edge_count(), 0) {
        for (std::size_t i = 0; i < st_.g.edge_count(); ++i)
            if (st_.violates(i)) push(i);
    }

    std::optional<std::size_t> pop() {
        while (!candidates_.empty()) {
            std::size_t slot = rng_.next_below(candidates_.size());
            std::size_t i = candidates_[slot];
            candidates_[slot] = candidates_.back();
            candidates_.pop_back();
            queued_[i] = 0;
            if (st_.violates(i)) return i;
        }
        return std::nullopt;
    }

    void touch(std::size_t fixed, bool was_added) {
        if (was_added ? !st_.p1_possible : !st_.p2_possible) return;
        const Edge& e = st_.g.edge(fixed);
        for (Vertex v : {e.u, e.v})
            for (std::size_t j : st_.g.incident_edges(v)) {
                if (queued_[j] || st_.in_h[j] != (was_added ? 1 : 0)) continue;
                if (st_.violates(j)) push(j);
            }
    }

private:
    void push(std::size_t i) {
        queued_[i] = 1;
        candidates_.push_back(i);
    }

    FixState& st_;
    Rng& rng_;
    std::vector<char> queued_;
    std::vector<std::size_t> candidates_;
};

template <class Scan>
FixTrace run_fixing(FixState& st, Scan& scan, bool record_phi) {
    FixTrace trace;
    if (record_phi) trace.phi2.push_back(st.phi2());
    while (auto i = scan.pop()) {
        const bool was_in = st.in_h[*i] != 0;
        if (!st.fix(*i)) continue;
        ++trace.steps;
        if (record_phi) trace.phi2.push_back(st.phi2());
        scan.touch(*i, /*was_added=*/!was_in);
    }
    return trace;
}

} // namespace

ConstructResult construct_edcs(const Graph& g, EdcsParams params, const ConstructOptions& opts,
                               Rng& rng) {
    std::vector<char> start(g.edge_count(), 0);
    if (opts.start_mask != nullptr) {
        if (opts.start_mask->size() != g.edge_count())
            throw std::invalid_argument("construct_edcs: start mask size mismatch");
        start = *opts.start_mask;
    } else if (opts.start == StartSet::Full) {
        std::fill(start.begin(), start.end(), 1);
    } else if (opts.start == StartSet::Random) {
        for (auto& b : start) b = rng.next_bool() ? 1 : 0;
    }

    FixState st(g, params, std::move(start));
    FixTrace trace;
    if (opts.policy == ScanPolicy::DirtyQueue) {
        DirtyQueueScan scan(st);
        trace = run_fixing(st, scan, opts.record_phi);
    } else {
        RandomScanOrder scan(st, rng);
        trace = run_fixing(st, scan, opts.record_phi);
    }
    return {Edcs(g, params, std::move(st.in_h)), std::move(trace)};
}

ConstructResult construct_edcs(const Graph& g, EdcsParams params, Rng& rng) {
    return construct_edcs(g, params, ConstructOptions{}, rng);
}

std::vector<EdcsViolation> validate_edcs(const Edcs& e) {
    std::vector<EdcsViolation> out;
    const Graph& g = e.host();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& ed = g.edge(i);
        const std::int64_t s = std::int64_t{e.degree(ed.u)} + e.degree(ed.v);
        if (e.contains(i) && s > e.params().beta) out.push_back({ed, true, s});
        if (!e.contains(i) && s < e.params().beta_minus) out.push_back({ed, false, s});
    }
    return out;
}

bool is_valid_edcs(const Graph& host, const std::vector<char>& membership, EdcsParams params) {
    std::vector<int> deg(host.vertex_count(), 0);
    for (std::size_t i = 0; i < host.edge_count(); ++i)
        if (membership[i]) {
            ++deg[host.edge(i).u];
            ++deg[host.edge(i).v];
        }
    for (std::size_t i = 0; i < host.edge_count(); ++i) {
        const Edge& e = host.edge(i);
        const std::int64_t s = std::int64_t{deg[e.u]} + deg[e.v];
        if (membership[i] ? s > params.beta : s < params.beta_minus) return false;
    }
    return true;
}

Matching solve_matching(const Graph& g, const Solver& solver) {
    switch (solver.kind) {
    case SolverKind::HopcroftKarp:
        if (solver.side == nullptr)
            throw std::invalid_argument("solve_matching: HopcroftKarp needs a bipartition");
        return hopcroft_karp(g, *solver.side);
    case SolverKind::BruteForce:
        return exact_mm_matching(g);
    case SolverKind::Greedy:
        return greedy_maximal_matching(g);
    }
    throw std::logic_error("solve_matching: unknown solver");
}

Matching edcs_matching(const Edcs& e, const Solver& solver) {
    return solve_matching(e.subgraph(), solver);
}

VertexCover edcs_vertex_cover(const Edcs& e, CoverStrategy strategy) {
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < e.host().vertex_count(); ++v)
        if (2 * std::int64_t{e.degree(v)} >= e.params().beta_minus) cover.push_back(v);
    Graph h = e.subgraph();
    if (strategy == CoverStrategy::Exact) {
        for (Vertex v : exact_vc_bruteforce(h)) cover.push_back(v);
    } else {
        for (Vertex v : greedy_maximal_matching(h).matched_vertices()) cover.push_back(v);
    }
    return normalize_cover(std::move(cover));
}

int degree_gap(const Edcs& a, const Edcs& b, const std::vector<char>* common) {
    if (a.params().beta != b.params().beta || a.params().beta_minus != b.params().beta_minus)
        throw std::invalid_argument("degree_gap: parameter mismatch");
    if (a.host().vertex_count() != b.host().vertex_count())
        throw std::invalid_argument("degree_gap: vertex count mismatch");
    int gap = 0;
    for (Vertex v = 0; v < a.host().vertex_count(); ++v) {
        if (common != nullptr && !(*common)[v]) continue;
        gap = std::max(gap, std::abs(a.degree(v) - b.degree(v)));
    }
    return gap;
}

} // namespace edcs
