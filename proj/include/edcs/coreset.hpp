#pragma once

#include "edcs/edcs.hpp"
#include "edcs/generators.hpp"
#include "edcs/graph.hpp"
#include "edcs/parallel.hpp"
#include "edcs/report.hpp"
#include "edcs/rng.hpp"
#include "edcs/sampling.hpp"

#include <filesystem>
#include <optional>

namespace edcs {

enum class CoresetMode { Theory, Practice };

// Parameters of the per-part EDCS coreset. Theory mode derives (lambda,
// beta) from (epsilon, n) with pinned constants c1 = 1e-4 and c2 = 750;
// practice mode takes beta and beta_minus directly.
struct CoresetParams {
    int k = 1;
    CoresetMode mode = CoresetMode::Practice;
    double epsilon = 0.1;
    EdcsParams edcs;

    // lambda = c1 (eps/ln n)^2, beta = c2 lambda^-3 ln n, beta_minus =
    // (1-lambda) beta.
    static CoresetParams theory(int k, double epsilon, int n);
    static CoresetParams practice(int k, std::int64_t beta, std::int64_t beta_minus,
                                  double epsilon = -1.0); // epsilon < 0: use 1 - beta_minus/beta

    // Composed union bounds per the k-partition composition: beta_C =
    // (1+lambda_C) k beta, beta_C_minus = (1-2 lambda_C) k beta.
    EdcsParams composed(double lambda_c) const;
    double scheduled_lambda_c(int n) const; // ln(n) * sqrt(lambda)
};

struct CoresetResult {
    std::vector<std::vector<Edge>> parts; // per-part coreset edge sets
    Graph union_graph;
    std::vector<Vertex> fixed_vertices; // vertex-cover variant, sorted
    std::size_t max_part_edges = 0;
    std::int64_t total_coreset_edges = 0;
    std::uint64_t seed = 0;
    int k = 1;
};

// Per-part maximum matching as the coreset (the warm-up scheme). The union
// of the part matchings approximates MM within a factor 3 + o(1).
CoresetResult maxmatching_coreset(const Graph& g, int k, Rng& rng, const Solver& solver,
                                  Exec exec = Exec::Serial);

// Per-part EDCS(G^(i), beta, beta_minus) as the coreset. fixed_vertices
// collects the per-part vertices with 2 deg >= (1-eps) beta.
CoresetResult edcs_coreset(const Graph& g, const CoresetParams& params, Rng& rng,
                           Exec exec = Exec::Serial);

enum class Problem { Matching, VertexCover };

Matching compose_matching(const Graph& host, const CoresetResult& r, const Solver& solver);

// Fixed vertices plus the matched vertices of a maximal matching of the
// union. Feasible for the host whenever the coreset came from the EDCS
// pipeline with epsilon >= lambda.
VertexCover compose_cover(const Graph& host, const CoresetResult& r);

// Solves the problem on the union (plus fixed vertices for vertex cover)
// and compares against host oracles: exact MM from the solver, and for VC
// the maximal-matching lower bound (or exact when the host fits the caps).
ApproxReport compose_and_solve(const Graph& host, const CoresetResult& r, Problem problem,
                               const Solver& solver);

struct AdversarialMatching {
    Matching matching;
    bool forced_l2r2 = false; // true when avoiding L2-R2 edges was impossible
};

// Maximum matching of a lower-bound-graph part that avoids L2-R2 edges
// whenever some maximum matching does; realizes the adversarial coreset
// choice in the factor-2 lower bound.
AdversarialMatching adversarial_max_matching(const Graph& part, const LowerboundGraph& labels);

// Smallest lambda-hat >= 0 such that `union_graph` validates as an EDCS of
// `host` with bounds (1+lh) base and (1-p2_factor*lh) base. Returns nullopt
// when even lh = lambda_max fails.
std::optional<double> fit_lambda_c(const Graph& host, const Graph& union_graph, double base,
                                   double p2_factor, double lambda_max);

// Same fit with multiplicity-counting degrees (the machine-sampled union
// keeps multiplicities for its degree accounting).
std::optional<double> fit_lambda_c(const Graph& host, const Multigraph& c, double base,
                                   double p2_factor, double lambda_max);

// Directory layout: part_<i>.txt per coreset, union.txt, manifest.json.
void write_coreset_dir(const std::filesystem::path& dir, const Graph& host,
                       const CoresetResult& r, const ApproxReport* report);

} // namespace edcs
