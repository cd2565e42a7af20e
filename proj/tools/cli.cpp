// Experiment driver: generators, pipelines, invariant sweeps; one CSV row
// per (instance, seed), deterministic for a fixed config and seed range.

#include <CLI11.hpp>

#include "edcs/coreset.hpp"
#include "edcs/edcs.hpp"
#include "edcs/generators.hpp"
#include "edcs/io.hpp"
#include "edcs/matching.hpp"
#include "edcs/mpc.hpp"
#include "edcs/oracles.hpp"
#include "edcs/parallel.hpp"
#include "edcs/report.hpp"
#include "edcs/streaming.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace edcs;

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

// Flat key=value configuration with '#' comments.
class Config {
public:
    static Config load(const std::string& path) {
        Config c;
        if (path.empty()) return c;
        std::ifstream in(path);
        if (!in) throw std::runtime_error("config: cannot open " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                auto last = s.find_last_not_of(" \t");
                s.resize(last == std::string::npos ? 0 : last + 1);
                return s;
            };
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw std::runtime_error("config: empty key in line '" + line + "'");
            c.values_[key] = value;
        }
        return c;
    }

    long long get_int(const std::string& key, long long fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : std::stoll(it->second);
    }
    double get_double(const std::string& key, double fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : std::stod(it->second);
    }
    std::string get_string(const std::string& key, std::string fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

private:
    std::map<std::string, std::string> values_;
};

struct SeedRange {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;

    std::size_t count() const { return static_cast<std::size_t>(hi - lo + 1); }
    std::uint64_t at(std::size_t i) const { return lo + i; }

    static SeedRange parse(const std::string& text) {
        SeedRange r;
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoull(text);
        } else {
            r.lo = std::stoull(text.substr(0, dots));
            r.hi = std::stoull(text.substr(dots + 2));
        }
        if (r.hi < r.lo) throw std::runtime_error("seeds: empty range " + text);
        return r;
    }
};

struct RunOptions {
    Config config;
    SeedRange seeds;
    Exec exec = Exec::OpenMP;
    // MPC flag overrides (negative/empty = keep config value).
    std::string mode;
    long long s = -1;
    long long base_threshold = -1;
    double alpha = -1;
    std::string trace_out;
};

struct RowResult {
    std::string row;
    bool ok = true;
    bool hard_failure = false;
};

struct ExperimentOutput {
    std::string header;
    std::vector<RowResult> rows;
    long long allowed_failures = 0;
};

using ExperimentFn = ExperimentOutput (*)(const RunOptions&);

// ---------------------------------------------------------------- fixtures

Graph fixture_graph(const Config& cfg, Rng& rng, std::string& name) {
    const std::string kind = cfg.get_string("graph", "er");
    if (kind == "triangle") {
        name = "triangle";
        return Graph(3, {{0, 1}, {1, 2}, {0, 2}});
    }
    if (kind == "file") {
        const std::string path = cfg.get_string("path", "");
        name = "file:" + path;
        return read_graph_file(path);
    }
    if (kind == "er") {
        const int n = static_cast<int>(cfg.get_int("n", 30));
        const double p = cfg.get_double("p", 0.2);
        name = "er(n=" + std::to_string(n) + ",p=" + fmt(p) + ")";
        return gen_random_graph(n, p, rng);
    }
    throw std::runtime_error("unknown graph fixture: " + kind);
}

// ------------------------------------------------------------- experiments

ExperimentOutput run_edcs_validate(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto beta = cfg.get_int("beta", 8);
    const auto beta_minus = cfg.get_int("beta_minus", beta - 1);
    ExperimentOutput out;
    out.header = "instance,seed,n,m,beta,beta_minus,steps,phi_monotone,step_bound_ok,violations,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng rng(seed);
        std::string name;
        Graph g = fixture_graph(cfg, rng, name);
        ConstructOptions copts;
        const std::string start = cfg.get_string("start", "empty");
        copts.start = start == "full"     ? StartSet::Full
                      : start == "random" ? StartSet::Random
                                          : StartSet::Empty;
        copts.policy = cfg.get_string("policy", "queue") == "random" ? ScanPolicy::RandomScan
                                                                     : ScanPolicy::DirtyQueue;
        Rng build(rng.next_u64());
        auto r = construct_edcs(g, EdcsParams(beta, beta_minus), copts, build);
        const auto violations = validate_edcs(r.edcs).size();
        const bool monotone = r.trace.phi_strictly_increasing();
        const bool bound = r.trace.steps_within_bound(g.vertex_count(), beta);
        const bool ok = violations == 0 && monotone && bound;
        std::ostringstream row;
        row << name << ',' << seed << ',' << g.vertex_count() << ',' << g.edge_count() << ','
            << beta << ',' << beta_minus << ',' << r.trace.steps << ',' << monotone << ','
            << bound << ',' << violations << ',' << ok;
        out.rows[i] = {row.str(), ok, !ok};
    });
    return out;
}

ExperimentOutput run_ddl_gap(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const int n = static_cast<int>(cfg.get_int("n", 500));
    const double avg_deg = cfg.get_double("avg_deg", 40);
    const auto beta = cfg.get_int("beta", 40);
    const double lambda = cfg.get_double("lambda", 0.1);
    const auto beta_minus = static_cast<long long>(std::llround((1.0 - lambda) * beta));
    const double calibration = cfg.get_double("calibration", 1.0);
    ExperimentOutput out;
    out.header = "instance,seed,n,m,beta,beta_minus,gap,bound,ok";
    out.allowed_failures = cfg.get_int("allowed_failures", 1);
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_graph(n, avg_deg / (n - 1), grng);
        EdcsParams params(beta, beta_minus);
        ConstructOptions queue_opts;
        ConstructOptions random_opts;
        random_opts.policy = ScanPolicy::RandomScan;
        random_opts.start = StartSet::Random;
        Rng ra(seed * 2 + 1), rb(seed * 2 + 2);
        auto a = construct_edcs(g, params, queue_opts, ra);
        auto b = construct_edcs(g, params, random_opts, rb);
        const int gap = degree_gap(a.edcs, b.edcs);
        const double bound = calibration * std::log(static_cast<double>(n)) *
                             std::sqrt(lambda) * static_cast<double>(beta);
        const bool ok = gap <= bound;
        std::ostringstream row;
        row << "er(n=" << n << ",avg_deg=" << fmt(avg_deg) << ")," << seed << ',' << n << ','
            << g.edge_count() << ',' << beta << ',' << beta_minus << ',' << gap << ','
            << fmt(bound) << ',' << ok;
        out.rows[i] = {row.str(), ok, !ok};
    });
    return out;
}

struct BipartiteSpec {
    int nl, nr;
    double p;
    std::string name;
};

BipartiteSpec bipartite_spec(const Config& cfg, int nl, int nr, double p) {
    BipartiteSpec s;
    s.nl = static_cast<int>(cfg.get_int("n_left", nl));
    s.nr = static_cast<int>(cfg.get_int("n_right", nr));
    s.p = cfg.get_double("p", p);
    s.name = "bipartite(" + std::to_string(s.nl) + "," + std::to_string(s.nr) + ",p=" + fmt(s.p) + ")";
    return s;
}

ExperimentOutput run_coreset_matching(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 400, 400, 0.15);
    const int k = static_cast<int>(cfg.get_int("k", 4));
    const auto beta = cfg.get_int("beta", 40);
    const auto beta_minus = cfg.get_int("beta_minus", 36);
    const double ratio_min = cfg.get_double("ratio_min", 1.0 / 1.6);
    ExperimentOutput out;
    out.header = "instance,seed,k,beta,beta_minus,mm_union,mm_host,ratio,max_part_edges,union_edges,communication,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
        auto sides = bipartite_sides(spec.nl, spec.nr);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(grng.next_u64());
        auto r = edcs_coreset(g, CoresetParams::practice(k, beta, beta_minus), run);
        auto rep = compose_and_solve(g, r, Problem::Matching, solver);
        const bool in_range = rep.matching_ratio <= 1.0 + 1e-9;
        const bool ok = in_range && rep.matching_ratio >= ratio_min;
        std::ostringstream row;
        row << spec.name << ',' << seed << ',' << k << ',' << beta << ',' << beta_minus << ','
            << rep.matching_size << ',' << rep.oracle_mm << ',' << fmt(rep.matching_ratio) << ','
            << rep.max_part_edges << ',' << rep.union_edges << ',' << rep.communication << ','
            << ok;
        out.rows[i] = {row.str(), ok, !in_range};
    });
    return out;
}

ExperimentOutput run_coreset_vc(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 400, 400, 0.15);
    const int k = static_cast<int>(cfg.get_int("k", 4));
    const auto beta = cfg.get_int("beta", 40);
    const auto beta_minus = cfg.get_int("beta_minus", 36);
    const double size_factor = cfg.get_double("size_factor", 4.5);
    ExperimentOutput out;
    out.header = "instance,seed,k,beta,beta_minus,cover_size,feasible,vc_lower_bound,size_bound,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
        Rng run(grng.next_u64());
        auto r = edcs_coreset(g, CoresetParams::practice(k, beta, beta_minus), run);
        VertexCover cover = compose_cover(g, r);
        const bool feasible = is_cover(g, cover);
        // |maximal matching| <= VC(G): certified lower bound.
        const auto lower = static_cast<long long>(greedy_maximal_matching(g).size());
        const double size_bound = size_factor * static_cast<double>(lower);
        const bool ok = feasible && static_cast<double>(cover.size()) <= size_bound;
        std::ostringstream row;
        row << spec.name << ',' << seed << ',' << k << ',' << beta << ',' << beta_minus << ','
            << cover.size() << ',' << feasible << ',' << lower << ',' << fmt(size_bound) << ','
            << ok;
        out.rows[i] = {row.str(), ok, !feasible};
    });
    return out;
}

ExperimentOutput run_maxmatching_coreset(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 300, 300, 0.1);
    const int k = static_cast<int>(cfg.get_int("k", 5));
    ExperimentOutput out;
    out.header = "instance,seed,k,mm_union,mm_host,ratio,communication,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
        auto sides = bipartite_sides(spec.nl, spec.nr);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(grng.next_u64());
        auto r = maxmatching_coreset(g, k, run, solver);
        auto rep = compose_and_solve(g, r, Problem::Matching, solver);
        const bool ok = rep.matching_ratio >= 1.0 / 3.0 && rep.matching_ratio <= 1.0 + 1e-9;
        std::ostringstream row;
        row << spec.name << ',' << seed << ',' << k << ',' << rep.matching_size << ','
            << rep.oracle_mm << ',' << fmt(rep.matching_ratio) << ',' << rep.communication << ','
            << ok;
        out.rows[i] = {row.str(), ok, !ok};
    });
    return out;
}

ExperimentOutput run_lowerbound_demo(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const int n = static_cast<int>(cfg.get_int("n", 2000));
    const int k = static_cast<int>(cfg.get_int("k", 10));
    const auto beta = cfg.get_int("beta", 40);
    const auto beta_minus = cfg.get_int("beta_minus", 36);
    const double adversarial_max = cfg.get_double("adversarial_max", 0.62);
    ExperimentOutput out;
    out.header = "instance,seed,n,k,adversarial_ratio,edcs_ratio,forced_flags,separated,ok";
    out.rows.resize(opt.seeds.count());
    const auto lb = gen_lowerbound_graph(n, k);
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng run(seed);
        Partition partition = random_k_partition(lb.graph, k, run);
        std::vector<Edge> union_edges;
        int forced = 0;
        for (int part_idx = 0; part_idx < k; ++part_idx) {
            Graph part = part_graph(lb.graph, partition, part_idx);
            auto adv = adversarial_max_matching(part, lb);
            forced += adv.forced_l2r2 ? 1 : 0;
            for (const auto& e : adv.matching.edges()) union_edges.push_back(e);
        }
        std::sort(union_edges.begin(), union_edges.end());
        union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
        Graph adv_union(lb.graph.vertex_count(), std::move(union_edges));
        const double adv_ratio =
            static_cast<double>(hopcroft_karp(adv_union, lb.side).size()) / lb.matching_size;

        Rng erun(seed + 0x10000);
        auto coreset = edcs_coreset(lb.graph, CoresetParams::practice(k, beta, beta_minus), erun);
        const double edcs_ratio =
            static_cast<double>(hopcroft_karp(coreset.union_graph, lb.side).size()) /
            lb.matching_size;
        const bool separated = edcs_ratio > adv_ratio;
        const bool ok = adv_ratio <= adversarial_max && separated;
        std::ostringstream row;
        row << "lowerbound(n=" << n << ",k=" << k << ")," << seed << ',' << n << ',' << k << ','
            << fmt(adv_ratio) << ',' << fmt(edcs_ratio) << ',' << forced << ',' << separated << ','
            << ok;
        out.rows[i] = {row.str(), ok, false};
    });
    return out;
}

MpcConfig mpc_config_from(const RunOptions& opt, std::uint64_t seed) {
    MpcConfig mpc;
    mpc.seed = seed;
    const std::string mode =
        !opt.mode.empty() ? opt.mode : opt.config.get_string("mode", "practice");
    mpc.mode = mode == "theory" ? MpcMode::Theory : MpcMode::Practice;
    mpc.s = opt.s >= 0 ? opt.s : opt.config.get_int("s", 0);
    mpc.base_threshold = static_cast<int>(
        opt.base_threshold >= 0 ? opt.base_threshold : opt.config.get_int("base_threshold", 16));
    mpc.machine_budget = opt.config.get_int("machine_budget", 0);
    return mpc;
}

void maybe_write_trace(const RunOptions& opt, const MpcRun& run, std::size_t index) {
    if (opt.trace_out.empty()) return;
    std::string path = opt.trace_out;
    if (opt.seeds.count() > 1) path += ".seed" + std::to_string(opt.seeds.at(index));
    std::ofstream f(path);
    f << trace_to_json(run.trace()) << '\n';
}

ExperimentOutput run_mpc_full(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const int n = static_cast<int>(cfg.get_int("n", 4000));
    const int d = static_cast<int>(cfg.get_int("d", 256));
    const double duality_factor = cfg.get_double("duality_factor", 8.0);
    PracticeKnobs knobs;
    knobs.c_p = cfg.get_double("c_p", knobs.c_p);
    knobs.tau = cfg.get_double("tau", knobs.tau);
    knobs.beta = cfg.get_int("pedcs_beta", knobs.beta);
    knobs.lambda = cfg.get_double("pedcs_lambda", knobs.lambda);
    knobs.use_average_degree = cfg.get_int("average_degree", 0) != 0;
    ExperimentOutput out;
    out.header = "instance,seed,n,d,matching,cover,feasible,depth,strict_delta,rounds,peak_load,violations,ratio,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_regular_ish(n, d, grng);
        MpcRun run(mpc_config_from(opt, seed), g.vertex_count());
        auto res = parallel_algorithm(run, g, g.max_degree(), knobs);
        const bool feasible = is_matching(g, res.matching) && is_cover(g, res.cover);
        bool strict = true;
        for (std::size_t l = 1; l < res.levels.size(); ++l)
            strict = strict && res.levels[l].realized_delta < res.levels[l - 1].realized_delta;
        const double ratio = res.matching.size() == 0
                                 ? 0.0
                                 : static_cast<double>(res.cover.size()) /
                                       static_cast<double>(res.matching.size());
        const auto summary = account(run);
        const bool ok = feasible && strict && ratio <= duality_factor && res.depth <= 4;
        std::ostringstream row;
        row << "regular(n=" << n << ",d=" << d << ")," << seed << ',' << n << ',' << d << ','
            << res.matching.size() << ',' << res.cover.size() << ',' << feasible << ','
            << res.depth << ',' << strict << ',' << summary.rounds << ',' << summary.peak_load
            << ',' << summary.violation_count << ',' << fmt(ratio) << ',' << ok;
        out.rows[i] = {row.str(), ok, !(feasible && strict)};
        maybe_write_trace(opt, run, i);
    });
    return out;
}

ExperimentOutput run_mpc_iterate(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 1000, 1000, 0.05);
    const double eps = cfg.get_double("eps", 0.2);
    const double alpha = opt.alpha > 0 ? opt.alpha : cfg.get_double("alpha", 8.0);
    const double ratio_min = cfg.get_double("ratio_min", 1.0 / 2.3);
    ExperimentOutput out;
    out.header = "instance,seed,eps,alpha,matching,mm_host,ratio,rounds,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
        auto sides = bipartite_sides(spec.nl, spec.nr);
        MpcRun run(mpc_config_from(opt, seed), g.vertex_count());
        Matching m = iterate_matching(run, g, eps, alpha);
        const bool valid = is_matching(g, m);
        const double opt_mm = static_cast<double>(hopcroft_karp(g, sides).size());
        const double ratio = opt_mm == 0 ? 1.0 : static_cast<double>(m.size()) / opt_mm;
        const bool ok = valid && ratio >= ratio_min;
        std::ostringstream row;
        row << spec.name << ',' << seed << ',' << fmt(eps) << ',' << fmt(alpha) << ',' << m.size()
            << ',' << static_cast<long long>(opt_mm) << ',' << fmt(ratio) << ','
            << account(run).rounds << ',' << ok;
        out.rows[i] = {row.str(), ok, !valid};
        maybe_write_trace(opt, run, i);
    });
    return out;
}

ExperimentOutput run_stream(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 500, 500, 0.1);
    const auto beta = cfg.get_int("beta", 40);
    const auto beta_minus = cfg.get_int("beta_minus", 36);
    const auto s_target_cfg = cfg.get_int("s_target", 0); // 0: use 4n
    const double ratio_min = cfg.get_double("ratio_min", 1.0 / 1.6);
    const std::string variant_name = cfg.get_string("variant", "edcs");
    const StreamVariant variant =
        variant_name == "maxmatching" ? StreamVariant::MaxMatching : StreamVariant::Edcs;
    const bool from_file = cfg.get_string("graph", "bipartite") == "file";
    const std::string report_json = cfg.get_string("report_json", "");
    ExperimentOutput out;
    out.header = "instance,seed,pieces,matching,mm_host,ratio,peak_space,space_bound,ok";
    out.rows.resize(opt.seeds.count());
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g;
        std::string name;
        std::vector<int> sides;
        Solver solver{SolverKind::Greedy};
        if (from_file) {
            // File-backed hosts have no known bipartition; the maximal-greedy
            // solver keeps the run exact-free but feasible.
            const std::string path = cfg.get_string("path", "");
            g = read_graph_file(path);
            name = "file:" + path;
        } else {
            g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
            sides = bipartite_sides(spec.nl, spec.nr);
            solver = Solver{SolverKind::HopcroftKarp, &sides};
            name = spec.name;
        }
        const std::int64_t s_target =
            s_target_cfg > 0 ? s_target_cfg : 4 * static_cast<std::int64_t>(g.vertex_count());
        Rng run(grng.next_u64());
        auto r = stream_coreset(g, s_target, EdcsParams(beta, beta_minus), run, variant, solver);
        r.report.instance = name;
        r.report.seed = seed;
        const double m = static_cast<double>(g.edge_count());
        const double space_bound =
            m / r.pieces + static_cast<double>(r.pieces) * g.vertex_count() * beta / 2.0;
        const bool space_ok = static_cast<double>(r.peak_space) <= 1.1 * space_bound;
        const bool ok = space_ok && r.report.matching_ratio >= ratio_min;
        std::ostringstream row;
        row << name << ',' << seed << ',' << r.pieces << ',' << r.report.matching_size << ','
            << r.report.oracle_mm << ',' << fmt(r.report.matching_ratio) << ',' << r.peak_space
            << ',' << fmt(1.1 * space_bound) << ',' << ok;
        out.rows[i] = {row.str(), ok, !space_ok};
        if (!report_json.empty()) {
            std::string path = report_json;
            if (opt.seeds.count() > 1) path += ".seed" + std::to_string(seed);
            std::ofstream f(path);
            f << to_json(r.report) << '\n';
        }
    });
    return out;
}

ExperimentOutput run_concentration_demo(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto spec = bipartite_spec(cfg, 150, 150, 0.1);
    const int resamples = static_cast<int>(cfg.get_int("resamples", 200));
    ExperimentOutput out;
    out.header = "instance,seed,p,mean_mm,std_mm,sqrt_scale";
    // Descriptive only: reports the spread of MM under edge sampling against
    // the sqrt(MM p) scale; no assertion.
    out.rows.resize(opt.seeds.count() * 3);
    parallel_for(opt.seeds.count(), opt.exec, [&](std::size_t i) {
        const double ps[] = {0.2, 0.5, 0.8};
        const std::uint64_t seed = opt.seeds.at(i);
        Rng grng(seed);
        Graph g = gen_random_bipartite(spec.nl, spec.nr, spec.p, grng);
        auto sides = bipartite_sides(spec.nl, spec.nr);
        const double host_mm = static_cast<double>(hopcroft_karp(g, sides).size());
        for (int pi = 0; pi < 3; ++pi) {
            const double p = ps[pi];
            double sum = 0, sum_sq = 0;
            for (int t = 0; t < resamples; ++t) {
                Rng srng = Rng(seed).child(1000 * pi + t);
                Graph sampled = edge_sample(g, p, srng);
                const double mm = static_cast<double>(hopcroft_karp(sampled, sides).size());
                sum += mm;
                sum_sq += mm * mm;
            }
            const double mean = sum / resamples;
            const double var = std::max(0.0, sum_sq / resamples - mean * mean);
            std::ostringstream row;
            row << spec.name << ',' << seed << ',' << fmt(p) << ',' << fmt(mean) << ','
                << fmt(std::sqrt(var)) << ',' << fmt(std::sqrt(host_mm * p));
            out.rows[i * 3 + pi] = {row.str(), true, false};
        }
    });
    return out;
}

const std::map<std::string, ExperimentFn> kExperiments = {
    {"edcs-validate", run_edcs_validate},
    {"ddl-gap", run_ddl_gap},
    {"coreset-matching", run_coreset_matching},
    {"coreset-vc", run_coreset_vc},
    {"maxmatching-coreset", run_maxmatching_coreset},
    {"lowerbound-demo", run_lowerbound_demo},
    {"mpc-full", run_mpc_full},
    {"mpc-iterate", run_mpc_iterate},
    {"stream", run_stream},
    {"concentration-demo", run_concentration_demo},
};

int do_run(const std::string& experiment, const RunOptions& opt, const std::string& out_path) {
    auto it = kExperiments.find(experiment);
    if (it == kExperiments.end()) {
        std::cerr << "unknown experiment: " << experiment << "\n  known:";
        for (const auto& [name, fn] : kExperiments) std::cerr << ' ' << name;
        std::cerr << '\n';
        return 2;
    }
    ExperimentOutput result = it->second(opt);
    std::ostringstream csv;
    csv << result.header << '\n';
    long long hard = 0;
    for (const auto& row : result.rows) {
        csv << row.row << '\n';
        hard += row.hard_failure ? 1 : 0;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        f << csv.str();
    }
    const long long allowed = opt.config.get_int("allowed_failures", result.allowed_failures);
    return hard > allowed ? 1 : 0;
}

int do_gen(const std::string& kind, const std::vector<std::string>& args, std::uint64_t seed,
           const std::string& out_path) {
    Rng rng(seed);
    Graph g;
    if (kind == "er") {
        if (args.size() != 2) throw std::runtime_error("gen er <n> <p>");
        g = gen_random_graph(std::stoi(args[0]), std::stod(args[1]), rng);
    } else if (kind == "bipartite") {
        if (args.size() != 3) throw std::runtime_error("gen bipartite <n_left> <n_right> <p>");
        g = gen_random_bipartite(std::stoi(args[0]), std::stoi(args[1]), std::stod(args[2]), rng);
    } else if (kind == "regular") {
        if (args.size() != 2) throw std::runtime_error("gen regular <n> <d>");
        g = gen_regular_ish(std::stoi(args[0]), std::stoi(args[1]), rng);
    } else if (kind == "lowerbound") {
        if (args.size() != 2) throw std::runtime_error("gen lowerbound <n> <k>");
        g = gen_lowerbound_graph(std::stoi(args[0]), std::stoi(args[1])).graph;
    } else {
        throw std::runtime_error("unknown generator: " + kind);
    }
    if (out_path.empty() || out_path == "-") {
        write_graph(std::cout, g);
    } else {
        write_graph_file(out_path, g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EDCS coresets for matching and vertex cover: experiment driver"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run a named experiment over a seed range");
    std::string experiment, config_path, seeds_text = "1..1", out_path;
    RunOptions opt;
    run_cmd->add_option("--experiment", experiment, "experiment name")->required();
    run_cmd->add_option("--config", config_path, "flat key=value config file");
    run_cmd->add_option("--seeds", seeds_text, "seed range a..b (inclusive) or single seed");
    run_cmd->add_option("--out", out_path, "CSV output path ('-' for stdout)");
    run_cmd->add_option("--mode", opt.mode, "mpc constant mode: theory|practice");
    run_cmd->add_option("--s", opt.s, "per-machine memory target in edge units");
    run_cmd->add_option("--base-threshold", opt.base_threshold, "practice-mode recursion floor");
    run_cmd->add_option("--alpha", opt.alpha, "iteration approximation factor");
    run_cmd->add_option("--trace-out", opt.trace_out, "write the MPC trace JSON here");
    bool serial = false;
    run_cmd->add_flag("--serial", serial, "disable the OpenMP seed fan-out");

    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph file");
    std::string gen_kind, gen_out;
    std::vector<std::string> gen_args;
    std::uint64_t gen_seed = 1;
    gen_cmd->add_option("kind", gen_kind, "er | bipartite | regular | lowerbound")->required();
    gen_cmd->add_option("args", gen_args, "generator arguments");
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--out", gen_out, "output path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            opt.config = Config::load(config_path);
            opt.seeds = SeedRange::parse(seeds_text);
            opt.exec = serial ? Exec::Serial : Exec::OpenMP;
            return do_run(experiment, opt, out_path);
        }
        return do_gen(gen_kind, gen_args, gen_seed, gen_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
