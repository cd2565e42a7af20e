#include "edcs/coreset.hpp"

#include "edcs/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace edcs {

CoresetParams CoresetParams::theory(int k, double epsilon, int n) {
    if (n < 3 || epsilon <= 0.0) throw std::invalid_argument("coreset theory params: bad inputs");
    constexpr double c1 = 1e-4;
    constexpr double c2 = 750.0;
    // Saturation point for beta: any value >= 2(n-1) makes P1 unbinding, so
    // capping keeps the degree-sum and potential arithmetic inside int64
    // without changing which subgraphs are valid.
    constexpr double beta_cap = 1e12;
    const double ln_n = std::log(static_cast<double>(n));
    const double lambda = c1 * (epsilon / ln_n) * (epsilon / ln_n);
    const double beta = std::min(beta_cap, c2 * std::pow(lambda, -3.0) * ln_n);
    CoresetParams p;
    p.k = k;
    p.mode = CoresetMode::Theory;
    p.epsilon = epsilon;
    const auto b = static_cast<std::int64_t>(std::ceil(beta));
    p.edcs = EdcsParams(b, static_cast<std::int64_t>(std::floor((1.0 - lambda) * b)));
    return p;
}

CoresetParams CoresetParams::practice(int k, std::int64_t beta, std::int64_t beta_minus,
                                      double epsilon) {
    CoresetParams p;
    p.k = k;
    p.mode = CoresetMode::Practice;
    p.edcs = EdcsParams(beta, beta_minus);
    // The fixed-vertex threshold only covers non-coreset edges when epsilon
    // is at least the part-level slack lambda.
    p.epsilon = std::max(epsilon, p.edcs.lambda());
    return p;
}

EdcsParams CoresetParams::composed(double lambda_c) const {
    const double base = static_cast<double>(k) * static_cast<double>(edcs.beta);
    const auto hi = static_cast<std::int64_t>(std::ceil((1.0 + lambda_c) * base));
    auto lo = static_cast<std::int64_t>(std::floor((1.0 - 2.0 * lambda_c) * base));
    lo = std::max<std::int64_t>(lo, 0);
    if (lo >= hi) lo = hi - 1;
    return EdcsParams(hi, lo);
}

double CoresetParams::scheduled_lambda_c(int n) const {
    return std::log(static_cast<double>(std::max(n, 3))) * std::sqrt(edcs.lambda());
}

namespace {

std::int64_t fixed_vertex_threshold(const CoresetParams& params) {
    // Integer form of 2 deg >= (1 - eps) beta.
    const double t = (1.0 - params.epsilon) * static_cast<double>(params.edcs.beta);
    return static_cast<std::int64_t>(std::ceil(t - 1e-9));
}

CoresetResult assemble(const Graph& g, std::vector<std::vector<Edge>> parts,
                       std::vector<Vertex> fixed, std::uint64_t seed, int k) {
    CoresetResult r;
    r.parts = std::move(parts);
    r.fixed_vertices = normalize_cover(std::move(fixed));
    r.seed = seed;
    r.k = k;
    std::vector<Edge> all;
    for (const auto& part : r.parts) {
        r.max_part_edges = std::max(r.max_part_edges, part.size());
        r.total_coreset_edges += static_cast<std::int64_t>(part.size());
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    r.union_graph = Graph(g.vertex_count(), std::move(all));
    return r;
}

} // namespace

CoresetResult maxmatching_coreset(const Graph& g, int k, Rng& rng, const Solver& solver,
                                  Exec exec) {
    const std::uint64_t seed = rng.seed();
    Partition partition = random_k_partition(g, k, rng);
    std::vector<std::vector<Edge>> parts(k);
    parallel_for(k, exec, [&](std::size_t i) {
        Graph part = part_graph(g, partition, static_cast<int>(i));
        parts[i] = solve_matching(part, solver).edges();
    });
    return assemble(g, std::move(parts), {}, seed, k);
}

CoresetResult edcs_coreset(const Graph& g, const CoresetParams& params, Rng& rng, Exec exec) {
    const std::uint64_t seed = rng.seed();
    Partition partition = random_k_partition(g, params.k, rng);
    const std::int64_t fixed_threshold = fixed_vertex_threshold(params);
    std::vector<std::vector<Edge>> parts(params.k);
    std::vector<std::vector<Vertex>> fixed_per_part(params.k);
    parallel_for(params.k, exec, [&](std::size_t i) {
        Graph part = part_graph(g, partition, static_cast<int>(i));
        Rng part_rng = rng.child(i);
        auto built = construct_edcs(part, params.edcs, part_rng);
        parts[i] = built.edcs.edge_list();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (2 * std::int64_t{built.edcs.degree(v)} >= fixed_threshold &&
                built.edcs.degree(v) > 0)
                fixed_per_part[i].push_back(v);
    });
    std::vector<Vertex> fixed;
    for (auto& f : fixed_per_part) fixed.insert(fixed.end(), f.begin(), f.end());
    return assemble(g, std::move(parts), std::move(fixed), seed, params.k);
}

Matching compose_matching(const Graph&, const CoresetResult& r, const Solver& solver) {
    return solve_matching(r.union_graph, solver);
}

VertexCover compose_cover(const Graph&, const CoresetResult& r) {
    std::vector<Vertex> cover = r.fixed_vertices;
    for (Vertex v : greedy_maximal_matching(r.union_graph).matched_vertices()) cover.push_back(v);
    return normalize_cover(std::move(cover));
}

ApproxReport compose_and_solve(const Graph& host, const CoresetResult& r, Problem problem,
                               const Solver& solver) {
    ApproxReport rep;
    rep.seed = r.seed;
    rep.max_part_edges = static_cast<std::int64_t>(r.max_part_edges);
    rep.union_edges = static_cast<std::int64_t>(r.union_graph.edge_count());
    rep.communication = r.total_coreset_edges;
    rep.oracle_mm = static_cast<std::int64_t>(solve_matching(host, solver).size());
    if (problem == Problem::Matching) {
        rep.algorithm = "coreset-matching";
        rep.matching_size = static_cast<std::int64_t>(compose_matching(host, r, solver).size());
    } else {
        rep.algorithm = "coreset-vertex-cover";
        VertexCover cover = compose_cover(host, r);
        rep.cover_size = static_cast<std::int64_t>(cover.size());
        // Reference: exact optimum when the oracle cap allows, otherwise the
        // maximal-matching lower bound on VC.
        try {
            rep.oracle_vc = static_cast<std::int64_t>(exact_vc_bruteforce(host).size());
        } catch (const std::length_error&) {
            rep.oracle_vc = static_cast<std::int64_t>(greedy_maximal_matching(host).size());
            rep.oracle_vc_is_bound = true;
        }
    }
    rep.finalize_ratios();
    return rep;
}

AdversarialMatching adversarial_max_matching(const Graph& part, const LowerboundGraph& labels) {
    auto is_l2r2 = [&](const Edge& e) {
        auto a = labels.layer[e.u], b = labels.layer[e.v];
        return (a == LowerboundLayer::L2 && b == LowerboundLayer::R2) ||
               (a == LowerboundLayer::R2 && b == LowerboundLayer::L2);
    };
    std::vector<Edge> avoiding;
    for (const auto& e : part.edges())
        if (!is_l2r2(e)) avoiding.push_back(e);
    Graph avoiding_graph(part.vertex_count(), std::move(avoiding));
    Matching without = hopcroft_karp(avoiding_graph, labels.side);
    Matching full = hopcroft_karp(part, labels.side);
    if (without.size() == full.size()) return {std::move(without), false};
    return {std::move(full), true};
}

namespace {

std::optional<double> fit_lambda_impl(const Graph& host, const Graph& support,
                                      const std::vector<std::int64_t>& deg, double base,
                                      double p2_factor, double lambda_max) {
    if (base <= 0.0) return std::nullopt;
    double lh = 0.0;
    for (const auto& e : support.edges()) {
        const double s = static_cast<double>(deg[e.u] + deg[e.v]);
        lh = std::max(lh, s / base - 1.0);
    }
    for (const auto& e : host.edges()) {
        if (support.has_edge(e.u, e.v)) continue;
        const double s = static_cast<double>(deg[e.u] + deg[e.v]);
        lh = std::max(lh, (1.0 - s / base) / p2_factor);
    }
    if (lh > lambda_max) return std::nullopt;
    return lh;
}

} // namespace

std::optional<double> fit_lambda_c(const Graph& host, const Graph& union_graph, double base,
                                   double p2_factor, double lambda_max) {
    std::vector<std::int64_t> deg(host.vertex_count(), 0);
    for (const auto& e : union_graph.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return fit_lambda_impl(host, union_graph, deg, base, p2_factor, lambda_max);
}

std::optional<double> fit_lambda_c(const Graph& host, const Multigraph& c, double base,
                                   double p2_factor, double lambda_max) {
    std::vector<std::int64_t> deg(host.vertex_count(), 0);
    for (Vertex v = 0; v < host.vertex_count(); ++v) deg[v] = c.degree(v);
    return fit_lambda_impl(host, c.dedup(), deg, base, p2_factor, lambda_max);
}

void write_coreset_dir(const std::filesystem::path& dir, const Graph& host,
                       const CoresetResult& r, const ApproxReport* report) {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest;
    manifest["k"] = r.k;
    manifest["seed"] = r.seed;
    manifest["host_vertices"] = host.vertex_count();
    manifest["host_edges"] = host.edge_count();
    manifest["max_part_edges"] = r.max_part_edges;
    manifest["union_edges"] = r.union_graph.edge_count();
    manifest["communication"] = r.total_coreset_edges;
    manifest["fixed_vertices"] = r.fixed_vertices.size();
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
        sizes.push_back(r.parts[i].size());
        write_graph_file(dir / ("part_" + std::to_string(i) + ".txt"),
                         Graph(host.vertex_count(), r.parts[i]));
    }
    manifest["part_sizes"] = sizes;
    if (report != nullptr) {
        manifest["ratios"] = {{"matching", report->matching_ratio}, {"cover", report->cover_ratio}};
        manifest["oracle_mm"] = report->oracle_mm;
    }
    write_graph_file(dir / "union.txt", r.union_graph);
    std::ofstream out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
}

} // namespace edcs
