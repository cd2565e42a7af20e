#pragma once

#include "edcs/graph.hpp"
#include "edcs/matching.hpp"
#include "edcs/oracles.hpp"
#include "edcs/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace edcs {

// Degree bounds of an edge degree constrained subgraph. For every subgraph
// edge (u,v) the degree sum deg_H(u)+deg_H(v) stays <= beta (P1); for every
// host edge outside the subgraph it stays >= beta_minus (P2).
struct EdcsParams {
    std::int64_t beta = 0;
    std::int64_t beta_minus = 0;

    EdcsParams() = default;
    EdcsParams(std::int64_t b, std::int64_t bm);

    double lambda() const { return 1.0 - static_cast<double>(beta_minus) / static_cast<double>(beta); }
};

// Subgraph H of a host graph with cached degrees. Immutable once built;
// safe to share across threads.
class Edcs {
public:
    Edcs(const Graph& host, EdcsParams params);
    Edcs(const Graph& host, EdcsParams params, std::vector<char> membership);

    const Graph& host() const { return *host_; }
    const EdcsParams& params() const { return params_; }
    bool contains(std::size_t edge_index) const { return in_h_[edge_index] != 0; }
    const std::vector<char>& membership() const { return in_h_; }
    int degree(Vertex v) const { return deg_[v]; }
    const std::vector<int>& degrees() const { return deg_; }
    std::size_t size() const { return size_; }

    std::vector<Edge> edge_list() const;
    Graph subgraph() const;

private:
    friend struct FixState;
    const Graph* host_;
    EdcsParams params_;
    std::vector<char> in_h_;
    std::vector<int> deg_;
    std::size_t size_ = 0;
};

// Record of one fixing run: the doubled potential 2*Phi after every step,
// where Phi = (beta - 1/2) * sum_v deg_H(v) - sum_{(u,v) in H} (deg_H(u) +
// deg_H(v)). Every fix raises Phi by at least 1, which bounds the step
// count.
struct FixTrace {
    std::int64_t steps = 0;
    std::vector<std::int64_t> phi2; // phi2[0] is the starting value

    bool phi_strictly_increasing() const;
    // steps <= 2 n beta^2, evaluated in 128-bit to survive huge beta.
    bool steps_within_bound(int n, std::int64_t beta) const;
};

enum class ScanPolicy {
    DirtyQueue, // queue of touched edges, P1 violations served before P2
    RandomScan, // uniformly random violating edge each step
};

enum class StartSet { Empty, Full, Random };

struct ConstructOptions {
    ScanPolicy policy = ScanPolicy::DirtyQueue;
    StartSet start = StartSet::Empty;
    const std::vector<char>* start_mask = nullptr; // overrides `start` when set
    bool record_phi = true;
};

struct ConstructResult {
    Edcs edcs;
    FixTrace trace;
};

// Fixing procedure: while some edge violates P1 or P2, remove it from H (P1)
// or add it (P2). Terminates by the potential argument; the result satisfies
// both properties for any scan order and start set.
ConstructResult construct_edcs(const Graph& g, EdcsParams params, const ConstructOptions& opts,
                               Rng& rng);
ConstructResult construct_edcs(const Graph& g, EdcsParams params, Rng& rng);

struct EdcsViolation {
    Edge edge;
    bool p1 = false; // true: P1 on a subgraph edge, false: P2 on a non-edge
    std::int64_t degree_sum = 0;
};

// Empty iff both EDCS properties hold; each entry names the offending edge.
std::vector<EdcsViolation> validate_edcs(const Edcs& e);

// Checks an arbitrary membership vector against the host, without building
// degree caches twice. Used by the enumeration oracles in tests.
bool is_valid_edcs(const Graph& host, const std::vector<char>& membership, EdcsParams params);

// Matching solver selection shared by the extraction and coreset pipelines.
enum class SolverKind {
    HopcroftKarp, // exact, bipartite hosts
    BruteForce,   // exact, size-capped
    Greedy,       // maximal matching, 2-approximate
};

struct Solver {
    SolverKind kind = SolverKind::Greedy;
    const std::vector<int>* side = nullptr; // bipartition, HopcroftKarp only
};

Matching solve_matching(const Graph& g, const Solver& solver);

// A matching of the EDCS subgraph H. With an exact solver and parameters in
// the analyzed regime this is a (3/2+eps)-approximation for the host.
Matching edcs_matching(const Edcs& e, const Solver& solver);

enum class CoverStrategy { Exact, MatchedVertices };

// V_high (vertices with 2*deg_H >= beta_minus) plus a cover of H. Feasible
// for the host whenever the EDCS validates: non-H edges have an endpoint in
// V_high by P2.
VertexCover edcs_vertex_cover(const Edcs& e, CoverStrategy strategy);

// Max over vertices (optionally restricted to `common`) of the degree
// difference between two EDCS built with identical parameters.
int degree_gap(const Edcs& a, const Edcs& b, const std::vector<char>* common = nullptr);

} // namespace edcs
