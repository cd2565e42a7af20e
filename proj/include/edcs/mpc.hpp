#pragma once

#include "edcs/edcs.hpp"
#include "edcs/graph.hpp"
#include "edcs/hashing.hpp"
#include "edcs/matching.hpp"
#include "edcs/parallel.hpp"
#include "edcs/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace edcs {

enum class MpcMode { Theory, Practice };

// Simulated machine pool: synchronous rounds, per-machine memory metered in
// edge units. A machine whose per-round load exceeds the budget is recorded
// as a violation; the run continues.
struct MpcConfig {
    std::int64_t s = 0;          // per-machine memory target, edge units
    std::int64_t machine_budget = 0; // 0 = unlimited
    MpcMode mode = MpcMode::Practice;
    std::uint64_t seed = 0;
    int base_threshold = 16;      // practice-mode recursion floor on Delta
    double memory_budget_factor = 1.0; // budget = factor * s * ln(n)^2

    std::int64_t memory_budget(int n) const;
};

struct MpcRound {
    std::string label;
    std::vector<std::int64_t> machine_loads;
    std::int64_t messages = 0;
};

struct MpcTrace {
    std::vector<MpcRound> rounds;
    std::vector<std::string> violations;

    int round_count() const { return static_cast<int>(rounds.size()); }
    std::int64_t peak_load() const;
    std::int64_t total_messages() const;
};

class MpcRun {
public:
    MpcRun(MpcConfig config, int n);

    const MpcConfig& config() const { return config_; }
    MpcTrace& trace() { return trace_; }
    const MpcTrace& trace() const { return trace_; }
    std::int64_t budget() const { return budget_; }
    Rng fork_rng(); // deterministic stream of child generators

    // Records one synchronous round; flags machines over budget.
    void charge_round(const std::string& label, std::vector<std::int64_t> machine_loads,
                      std::int64_t messages);

private:
    MpcConfig config_;
    std::int64_t budget_;
    std::uint64_t forks_ = 0;
    MpcTrace trace_;
};

// Parameters of one distributed-EDCS invocation. Theory mode pins the
// published formulas: p = (200 ln n) sqrt(s/(n Delta)) capped at 1, k =
// ceil(800 ln n / p^2), kappa = ceil(20 ln n), lambda = (2 ln n)^-3, beta =
// ceil(750 lambda^-2 ln n); the leading constants are exposed so desk-scale
// runs can shrink them without changing the functional form.
struct PedcsParams {
    double p_requested = 1.0;
    std::int64_t hash_range = 1; // round(1/p); realized p = 1/hash_range
    std::int64_t k = 1;
    int kappa = 2;
    std::int64_t beta = 2;
    std::int64_t beta_minus = 1;
    double lambda = 0.5;
    double lambda_c = 0.25;

    double p_realized() const { return 1.0 / static_cast<double>(hash_range); }
    std::int64_t beta_c() const;       // round(p k (1+lambda_c) beta)
    std::int64_t beta_c_minus() const; // round(p k (1-lambda_c) beta)

    struct TheoryConstants {
        double p_factor = 200.0;     // p = p_factor * ln n * sqrt(s/(n Delta))
        double k_factor = 800.0;     // k = ceil(k_factor * ln n / p^2)
        double kappa_factor = 20.0;  // kappa = ceil(kappa_factor * ln n)
        double beta_factor = 750.0;  // beta = ceil(beta_factor * lambda^-2 * ln n)
    };

    static PedcsParams theory(int n, std::int64_t max_degree, std::int64_t s);
    static PedcsParams theory(int n, std::int64_t max_degree, std::int64_t s,
                              TheoryConstants constants);
    static PedcsParams practice(double p, std::int64_t k, int kappa, std::int64_t beta,
                                double lambda, double lambda_c = 0.2);
};

// Practice-mode knobs for the recursive driver: per level, p = c_p /
// sqrt(Delta) capped at 1 and k = ceil(tau / p^2), so each edge lands in
// tau machines in expectation and the composed degree bound contracts like
// Delta^(2/3)-ish at desk scale.
struct PracticeKnobs {
    double c_p = 16.0;
    double tau = 4.0;
    std::int64_t beta = 8;
    double lambda = 0.25;
    double lambda_c = 0.25;
    int kappa = 8;
    // Derive the sampling parameters from the average degree m/n instead of
    // the maximum degree (machine-count optimization, same correctness
    // argument).
    bool use_average_degree = false;

    PedcsParams for_degree(std::int64_t max_degree) const;
};

struct PedcsResult {
    Multigraph c;                       // union of machine EDCS, multiplicities kept
    PedcsParams params;
    std::vector<std::int64_t> machine_loads; // |G^(i)| per machine
    std::int64_t uncovered_edges = 0;   // host edges sampled into no machine
};

// Distributed EDCS: machine i holds the induced subgraph on {v: h_v(i)=0},
// computes a local EDCS(G^(i), beta, beta_minus), and the union multigraph C
// is returned. Charged 3 rounds.
PedcsResult parallel_edcs(MpcRun& run, const Graph& g, std::int64_t max_degree,
                          const PedcsParams& params, Exec exec = Exec::Serial);

// One-shot matching incident on S: sample S' from S with probability 1/2,
// each sampled vertex proposes one uniform incident edge into g \ S', keep
// proposals whose endpoints are unique. Every v in S must have deg_g(v) >=
// Delta/3; a violation is rejected with the vertex named. Charged 3 rounds.
Matching random_match(MpcRun& run, const Graph& g, const std::vector<Vertex>& s,
                      std::int64_t max_degree, Rng& rng);

struct LevelStats {
    std::int64_t delta_in = 0;       // degree bound entering the level
    std::int64_t realized_delta = 0; // max degree of the level input graph
    std::int64_t beta_c = 0;
    std::int64_t v_high = 0;
    std::int64_t m_high = 0;
    std::int64_t leftover_edges = 0; // non-C edges fed into the residual
    std::int64_t p2_miss_edges = 0;  // non-C edges with no V_high endpoint
    std::int64_t uncovered_edges = 0;
    bool base_case = false;
};

struct ParallelAlgorithmResult {
    VertexCover cover;
    Matching matching;
    std::vector<LevelStats> levels;
    int depth = 0; // recursion levels, base case included
};

// Recursive matching + vertex cover driver. Base case (Delta <= threshold):
// one machine, greedy maximal matching. Otherwise: C = parallel_edcs,
// V_high = {v: 2 deg_C(v) >= beta_c_minus}, M_high = random_match on the
// deduplicated C, then recurse on the induced residual. Host edges that C
// fails to protect (no V_high endpoint, P2 miss) are fed into the residual,
// which makes the cover exact on every run, not just with high probability.
ParallelAlgorithmResult parallel_algorithm(MpcRun& run, const Graph& g, std::int64_t max_degree,
                                           const PracticeKnobs& knobs = {},
                                           Exec exec = Exec::Serial);

// ceil(alpha ln(1/eps)) repetitions of parallel_algorithm, removing matched
// vertices between rounds.
Matching iterate_matching(MpcRun& run, const Graph& g, double eps, double alpha = 8.0,
                          const PracticeKnobs& knobs = {}, Exec exec = Exec::Serial);

struct MpcSummary {
    int rounds = 0;
    std::int64_t peak_load = 0;
    std::int64_t total_messages = 0;
    std::size_t violation_count = 0;
};

MpcSummary account(const MpcRun& run);
std::string trace_to_json(const MpcTrace& trace);

} // namespace edcs
