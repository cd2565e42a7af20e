#include "edcs/mpc.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace edcs {

namespace {

std::int64_t saturating_from_double(double x) {
    if (x >= static_cast<double>(std::numeric_limits<std::int64_t>::max()))
        return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(x);
}

} // namespace

std::int64_t MpcConfig::memory_budget(int n) const {
    if (s <= 0) return std::numeric_limits<std::int64_t>::max();
    const double ln_n = std::log(static_cast<double>(std::max(n, 3)));
    return saturating_from_double(memory_budget_factor * static_cast<double>(s) * ln_n * ln_n);
}

std::int64_t MpcTrace::peak_load() const {
    std::int64_t peak = 0;
    for (const auto& r : rounds)
        for (auto l : r.machine_loads) peak = std::max(peak, l);
    return peak;
}

std::int64_t MpcTrace::total_messages() const {
    std::int64_t total = 0;
    for (const auto& r : rounds) total += r.messages;
    return total;
}

MpcRun::MpcRun(MpcConfig config, int n) : config_(config), budget_(config.memory_budget(n)) {}

Rng MpcRun::fork_rng() { return Rng(config_.seed).child(0xf0f0f0f0ull + forks_++); }

void MpcRun::charge_round(const std::string& label, std::vector<std::int64_t> machine_loads,
                          std::int64_t messages) {
    const int round_index = trace_.round_count();
    if (config_.machine_budget > 0 &&
        static_cast<std::int64_t>(machine_loads.size()) > config_.machine_budget)
        trace_.violations.push_back("round " + std::to_string(round_index) + " (" + label +
                                    "): uses " + std::to_string(machine_loads.size()) +
                                    " machines > budget " + std::to_string(config_.machine_budget));
    for (std::size_t i = 0; i < machine_loads.size(); ++i)
        if (machine_loads[i] > budget_)
            trace_.violations.push_back("round " + std::to_string(round_index) + " (" + label +
                                        "): machine " + std::to_string(i) + " load " +
                                        std::to_string(machine_loads[i]) + " > budget " +
                                        std::to_string(budget_));
    trace_.rounds.push_back({label, std::move(machine_loads), messages});
}

std::int64_t PedcsParams::beta_c() const {
    return std::llround(p_realized() * static_cast<double>(k) * (1.0 + lambda_c) *
                        static_cast<double>(beta));
}

std::int64_t PedcsParams::beta_c_minus() const {
    return std::max<std::int64_t>(
        0, std::llround(p_realized() * static_cast<double>(k) * (1.0 - lambda_c) *
                        static_cast<double>(beta)));
}

PedcsParams PedcsParams::theory(int n, std::int64_t max_degree, std::int64_t s) {
    return theory(n, max_degree, s, TheoryConstants{});
}

PedcsParams PedcsParams::theory(int n, std::int64_t max_degree, std::int64_t s,
                                TheoryConstants constants) {
    if (n < 3 || max_degree < 1 || s < 1)
        throw std::invalid_argument("pedcs theory params: bad inputs");
    const double ln_n = std::log(static_cast<double>(n));
    PedcsParams p;
    p.p_requested = std::min(
        1.0, constants.p_factor * ln_n *
                 std::sqrt(static_cast<double>(s) /
                           (static_cast<double>(n) * static_cast<double>(max_degree))));
    p.hash_range = std::max<std::int64_t>(1, std::llround(1.0 / p.p_requested));
    const double pr = p.p_realized();
    p.k = std::max<std::int64_t>(1, saturating_from_double(std::ceil(constants.k_factor * ln_n / (pr * pr))));
    p.kappa = std::max(1, static_cast<int>(std::ceil(constants.kappa_factor * ln_n)));
    p.lambda = std::pow(2.0 * ln_n, -3.0);
    p.beta = saturating_from_double(std::ceil(constants.beta_factor * ln_n / (p.lambda * p.lambda)));
    p.beta_minus = std::max<std::int64_t>(
        0, std::min(p.beta - 1, saturating_from_double(std::floor((1.0 - p.lambda) *
                                                                  static_cast<double>(p.beta)))));
    p.lambda_c = ln_n * std::sqrt(p.lambda);
    return p;
}

PedcsParams PedcsParams::practice(double p, std::int64_t k, int kappa, std::int64_t beta,
                                  double lambda, double lambda_c) {
    if (p <= 0.0 || p > 1.0 || k < 1 || kappa < 1 || beta < 1 || lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("pedcs practice params: bad inputs");
    PedcsParams out;
    out.p_requested = p;
    out.hash_range = std::max<std::int64_t>(1, std::llround(1.0 / p));
    out.k = k;
    out.kappa = kappa;
    out.beta = beta;
    out.beta_minus = std::clamp<std::int64_t>(
        std::llround((1.0 - lambda) * static_cast<double>(beta)), 0, beta - 1);
    out.lambda = lambda;
    out.lambda_c = lambda_c;
    return out;
}

PedcsParams PracticeKnobs::for_degree(std::int64_t max_degree) const {
    const double p = std::min(1.0, c_p / std::sqrt(static_cast<double>(std::max<std::int64_t>(max_degree, 1))));
    const auto range = std::max<std::int64_t>(1, std::llround(1.0 / p));
    const double pr = 1.0 / static_cast<double>(range);
    const auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(tau / (pr * pr))));
    // lambda_c below lambda would put the high-degree threshold above what
    // per-machine P2 guarantees, leaving non-C edges unprotected.
    return PedcsParams::practice(p, k, kappa, beta, lambda, std::max(lambda_c, lambda));
}

PedcsResult parallel_edcs(MpcRun& run, const Graph& g, std::int64_t max_degree,
                          const PedcsParams& params, Exec exec) {
    if (max_degree < g.max_degree())
        throw std::invalid_argument("parallel_edcs: max_degree below actual maximum degree");
    const int n = g.vertex_count();
    const auto k = static_cast<std::size_t>(params.k);
    Rng base = run.fork_rng();

    // Machine membership I(v) via per-vertex kappa-wise hashes h_v: [k] ->
    // [hash_range], machine i holds v iff h_v(i) == 0.
    std::vector<std::vector<std::int32_t>> machines_of(n);
    parallel_for(n, exec, [&](std::size_t v) {
        if (params.hash_range == 1) {
            machines_of[v].resize(k);
            for (std::size_t i = 0; i < k; ++i) machines_of[v][i] = static_cast<std::int32_t>(i);
            return;
        }
        Rng vr = base.child(v);
        KWiseHash h(params.kappa, static_cast<std::uint64_t>(params.hash_range), vr);
        for (std::size_t i = 0; i < k; ++i)
            if (h(i) == 0) machines_of[v].push_back(static_cast<std::int32_t>(i));
    });

    std::vector<std::vector<Edge>> machine_edges(k);
    std::int64_t uncovered = 0;
    for (const auto& e : g.edges()) {
        const auto& iu = machines_of[e.u];
        const auto& iv = machines_of[e.v];
        bool covered = false;
        std::size_t a = 0, b = 0;
        while (a < iu.size() && b < iv.size()) {
            if (iu[a] < iv[b]) ++a;
            else if (iu[a] > iv[b]) ++b;
            else {
                machine_edges[iu[a]].push_back(e);
                covered = true;
                ++a;
                ++b;
            }
        }
        if (!covered) ++uncovered;
    }

    std::vector<std::int64_t> loads(k);
    for (std::size_t i = 0; i < k; ++i) loads[i] = static_cast<std::int64_t>(machine_edges[i].size());
    std::int64_t inbound = 0;
    for (auto l : loads) inbound += l;
    run.charge_round("pedcs-distribute", loads, inbound);

    const EdcsParams local(params.beta, params.beta_minus);
    std::vector<std::vector<Edge>> local_edcs(k);
    parallel_for(k, exec, [&](std::size_t i) {
        Graph machine_graph(n, std::move(machine_edges[i]));
        Rng mr = base.child(0x9000000000ull + i);
        ConstructOptions opts;
        opts.record_phi = false;
        local_edcs[i] = construct_edcs(machine_graph, local, opts, mr).edcs.edge_list();
    });
    run.charge_round("pedcs-local", loads, 0);

    std::vector<Edge> all;
    std::vector<std::int64_t> out_loads(k);
    for (std::size_t i = 0; i < k; ++i) {
        out_loads[i] = static_cast<std::int64_t>(local_edcs[i].size());
        all.insert(all.end(), local_edcs[i].begin(), local_edcs[i].end());
    }
    std::int64_t outbound = static_cast<std::int64_t>(all.size());
    run.charge_round("pedcs-collect", out_loads, outbound);

    return {Multigraph(n, std::move(all)), params, std::move(loads), uncovered};
}

Matching random_match(MpcRun& run, const Graph& g, const std::vector<Vertex>& s,
                      std::int64_t max_degree, Rng& rng) {
    if (max_degree < g.max_degree())
        throw std::invalid_argument("random_match: max_degree below actual maximum degree");
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (3 * std::int64_t{g.degree(v)} < max_degree)
            throw std::invalid_argument("random_match: vertex " + std::to_string(v) +
                                        " has degree below Delta/3");

    std::vector<char> in_s_prime(g.vertex_count(), 0);
    std::vector<Vertex> s_prime;
    for (Vertex v : sorted)
        if (rng.next_bool()) {
            in_s_prime[v] = 1;
            s_prime.push_back(v);
        }
    run.charge_round("rmatch-sample", {static_cast<std::int64_t>(s_prime.size())},
                     static_cast<std::int64_t>(s_prime.size()));

    // Each sampled vertex proposes one uniform incident edge into g \ S'.
    std::vector<std::pair<Vertex, Vertex>> proposals;
    std::vector<int> hits(g.vertex_count(), 0);
    for (Vertex v : s_prime) {
        int outside = 0;
        for (Vertex w : g.neighbors(v))
            if (!in_s_prime[w]) ++outside;
        if (outside == 0) continue;
        auto pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(outside)));
        for (Vertex w : g.neighbors(v)) {
            if (in_s_prime[w]) continue;
            if (pick-- == 0) {
                proposals.emplace_back(v, w);
                ++hits[w];
                break;
            }
        }
    }
    run.charge_round("rmatch-propose", {static_cast<std::int64_t>(proposals.size())},
                     static_cast<std::int64_t>(proposals.size()));

    Matching m(g.vertex_count());
    for (const auto& [v, w] : proposals)
        if (hits[w] == 1) m.add(Edge(v, w));
    run.charge_round("rmatch-resolve", {static_cast<std::int64_t>(m.size())},
                     static_cast<std::int64_t>(m.size()));
    return m;
}

namespace {

struct RecursionContext {
    MpcRun& run;
    const PracticeKnobs& knobs;
    Exec exec;
    int max_depth;
    std::vector<LevelStats> levels;
};

std::int64_t base_threshold(const MpcRun& run, int n) {
    const auto& cfg = run.config();
    if (cfg.mode == MpcMode::Practice) return cfg.base_threshold;
    const double ln_n = std::log(static_cast<double>(std::max(n, 3)));
    const double s = static_cast<double>(std::max<std::int64_t>(cfg.s, 1));
    return saturating_from_double(static_cast<double>(n) / s * 400.0 * std::pow(ln_n, 12.0));
}

std::pair<VertexCover, Matching> recurse(RecursionContext& ctx, const Graph& g,
                                         std::int64_t delta, int depth) {
    LevelStats stats;
    stats.delta_in = delta;
    stats.realized_delta = g.max_degree();
    const int n = g.vertex_count();

    const bool at_base = delta <= base_threshold(ctx.run, n) || g.edge_count() == 0 ||
                         depth + 1 >= ctx.max_depth;
    if (at_base) {
        stats.base_case = true;
        const auto m_edges = static_cast<std::int64_t>(g.edge_count());
        ctx.run.charge_round("base-ship", {m_edges}, m_edges);
        Matching m = greedy_maximal_matching(g);
        ctx.run.charge_round("base-solve", {m_edges}, static_cast<std::int64_t>(m.size()));
        stats.m_high = static_cast<std::int64_t>(m.size());
        ctx.levels.push_back(stats);
        VertexCover cover = normalize_cover(m.matched_vertices());
        return {std::move(cover), std::move(m)};
    }

    std::int64_t parameter_degree = delta;
    if (ctx.knobs.use_average_degree && g.edge_count() > 0)
        parameter_degree = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(g.edge_count()) / std::max(n, 1));
    const PedcsParams params = ctx.run.config().mode == MpcMode::Theory
                                   ? PedcsParams::theory(n, parameter_degree, ctx.run.config().s)
                                   : ctx.knobs.for_degree(parameter_degree);
    PedcsResult pedcs = parallel_edcs(ctx.run, g, delta, params, ctx.exec);
    stats.uncovered_edges = pedcs.uncovered_edges;
    stats.beta_c = params.beta_c();
    const std::int64_t high_threshold = params.beta_c_minus();

    std::vector<char> high(n, 0);
    std::vector<Vertex> v_high;
    for (Vertex v = 0; v < n; ++v)
        if (2 * pedcs.c.degree(v) >= high_threshold && pedcs.c.degree(v) > 0) {
            high[v] = 1;
            v_high.push_back(v);
        }
    stats.v_high = static_cast<std::int64_t>(v_high.size());

    Graph dedup = pedcs.c.dedup();
    const std::int64_t match_delta = std::max<std::int64_t>(dedup.max_degree(), 1);
    std::vector<Vertex> eligible;
    for (Vertex v : v_high)
        if (3 * std::int64_t{dedup.degree(v)} >= match_delta) eligible.push_back(v);
    Rng match_rng = ctx.run.fork_rng();
    Matching m_high = random_match(ctx.run, dedup, eligible, match_delta, match_rng);
    stats.m_high = static_cast<std::int64_t>(m_high.size());

    std::vector<char> removed(n, 0);
    for (Vertex v : v_high) removed[v] = 1;
    for (Vertex v : m_high.matched_vertices()) removed[v] = 1;

    // Residual: edges with both endpoints surviving. For a valid EDCS every
    // non-C edge has a V_high endpoint, so this is exactly the induced
    // dedup(C); edges that slipped past P2 are carried along so the cover
    // stays feasible unconditionally.
    std::vector<Edge> residual_edges;
    std::int64_t leftover = 0;
    std::int64_t p2_miss = 0;
    {
        std::vector<char> in_c(g.edge_count(), 0);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (dedup.has_edge(g.edge(i).u, g.edge(i).v)) in_c[i] = 1;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (!in_c[i] && !high[e.u] && !high[e.v]) ++p2_miss;
            if (!removed[e.u] && !removed[e.v]) {
                residual_edges.push_back(e);
                if (!in_c[i]) ++leftover;
            }
        }
    }
    stats.leftover_edges = leftover;
    stats.p2_miss_edges = p2_miss;
    ctx.levels.push_back(stats);

    Graph residual(n, std::move(residual_edges));
    std::int64_t next_delta = residual.max_degree();
    // Termination guard: recurse only on strictly smaller degree bounds.
    if (next_delta >= delta) next_delta = delta - 1;
    auto [v_rec, m_rec] = recurse(ctx, residual, std::max<std::int64_t>(next_delta, 0), depth + 1);

    Matching combined(n);
    for (const auto& e : m_high.edges()) combined.add(e);
    for (const auto& e : m_rec.edges()) combined.add(e);
    std::vector<Vertex> cover = v_rec;
    for (Vertex v : v_high) cover.push_back(v);
    for (Vertex v : m_high.matched_vertices()) cover.push_back(v);
    return {normalize_cover(std::move(cover)), std::move(combined)};
}

} // namespace

ParallelAlgorithmResult parallel_algorithm(MpcRun& run, const Graph& g, std::int64_t max_degree,
                                           const PracticeKnobs& knobs, Exec exec) {
    if (max_degree < g.max_degree())
        throw std::invalid_argument("parallel_algorithm: max_degree below actual maximum degree");
    const double dd = static_cast<double>(std::max<std::int64_t>(max_degree, 4));
    const int guard = static_cast<int>(std::ceil(std::log(std::log2(dd)) / std::log(1.5))) + 2;
    RecursionContext ctx{run, knobs, exec, guard, {}};
    auto [cover, matching] = recurse(ctx, g, max_degree, 0);
    ParallelAlgorithmResult out;
    out.cover = std::move(cover);
    out.matching = std::move(matching);
    out.levels = std::move(ctx.levels);
    out.depth = static_cast<int>(out.levels.size());
    return out;
}

Matching iterate_matching(MpcRun& run, const Graph& g, double eps, double alpha,
                          const PracticeKnobs& knobs, Exec exec) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("iterate_matching: eps outside (0,1)");
    const int rounds = std::max(1, static_cast<int>(std::ceil(alpha * std::log(1.0 / eps))));
    Matching total(g.vertex_count());
    std::vector<char> alive(g.vertex_count(), 1);
    Graph residual = g;
    for (int t = 0; t < rounds && residual.edge_count() > 0; ++t) {
        auto result = parallel_algorithm(run, residual, residual.max_degree(), knobs, exec);
        for (const auto& e : result.matching.edges()) {
            total.add(e);
            alive[e.u] = alive[e.v] = 0;
        }
        std::vector<Edge> next;
        for (const auto& e : residual.edges())
            if (alive[e.u] && alive[e.v]) next.push_back(e);
        residual = Graph(g.vertex_count(), std::move(next));
    }
    return total;
}

MpcSummary account(const MpcRun& run) {
    return {run.trace().round_count(), run.trace().peak_load(), run.trace().total_messages(),
            run.trace().violations.size()};
}

std::string trace_to_json(const MpcTrace& trace) {
    nlohmann::json j;
    j["rounds"] = trace.round_count();
    j["per_round"] = nlohmann::json::array();
    for (const auto& r : trace.rounds)
        j["per_round"].push_back(
            {{"label", r.label}, {"machine_loads", r.machine_loads}, {"messages", r.messages}});
    j["violations"] = trace.violations;
    return j.dump(2);
}

} // namespace edcs
