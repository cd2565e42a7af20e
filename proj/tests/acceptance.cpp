// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff all
// criteria pass. `acceptance --only N` runs a single criterion.

#include "edcs/coreset.hpp"
#include "edcs/edcs.hpp"
#include "edcs/generators.hpp"
#include "edcs/matching.hpp"
#include "edcs/mpc.hpp"
#include "edcs/oracles.hpp"
#include "edcs/parallel.hpp"
#include "edcs/streaming.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace edcs;

namespace {

struct Outcome {
    bool pass = false;
    std::string details;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1. EDCS soundness over fuzzed constructions ---------------------------
Outcome criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng meta(20240901);
    int failures = 0;
    const int runs = 1000;
    for (int trial = 0; trial < runs; ++trial) {
        const int n = 4 + static_cast<int>(meta.next_below(47));
        const double p = 0.05 + 0.45 * meta.next_double();
        Rng gen_rng(meta.next_u64());
        Graph g = gen_random_graph(n, p, gen_rng);
        const auto beta = static_cast<std::int64_t>(3 + meta.next_below(58));
        const auto beta_minus = static_cast<std::int64_t>(1 + meta.next_below(beta - 1));
        ConstructOptions opts;
        opts.start = static_cast<StartSet>(meta.next_below(3));
        opts.policy = static_cast<ScanPolicy>(meta.next_below(2));
        Rng run_rng(meta.next_u64());
        auto r = construct_edcs(g, EdcsParams(beta, beta_minus), opts, run_rng);
        if (!validate_edcs(r.edcs).empty() || !r.trace.phi_strictly_increasing() ||
            !r.trace.steps_within_bound(n, beta))
            ++failures;
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << runs << " fuzzed runs, " << failures << " failures, " << elapsed << " s";
    return {failures == 0 && elapsed < 60.0, d.str()};
}

// --- 2. Exhaustive micro-oracle on <= 5 vertices ----------------------------
Outcome criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    long long checked = 0, mismatches = 0;
    for (int n = 0; n <= 5; ++n) {
        std::vector<Edge> all_pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        const std::size_t pair_count = all_pairs.size();
        for (std::size_t gmask = 0; gmask < (std::size_t{1} << pair_count); ++gmask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pair_count; ++i)
                if ((gmask >> i) & 1) edges.push_back(all_pairs[i]);
            Graph g(n, std::move(edges));
            const std::size_t m = g.edge_count();
            for (std::int64_t beta = 1; beta <= 6; ++beta)
                for (std::int64_t bm = 0; bm < beta; ++bm) {
                    EdcsParams params(beta, bm);
                    // Oracle: every membership satisfying both properties.
                    std::vector<std::vector<char>> valid;
                    for (std::size_t hmask = 0; hmask < (std::size_t{1} << m); ++hmask) {
                        std::vector<char> member(m, 0);
                        for (std::size_t i = 0; i < m; ++i) member[i] = (hmask >> i) & 1;
                        if (is_valid_edcs(g, member, params)) valid.push_back(std::move(member));
                    }
                    for (auto policy : {ScanPolicy::DirtyQueue, ScanPolicy::RandomScan})
                        for (auto start : {StartSet::Empty, StartSet::Full}) {
                            ConstructOptions opts;
                            opts.policy = policy;
                            opts.start = start;
                            Rng rng(gmask * 131 + beta * 7 + bm);
                            auto r = construct_edcs(g, params, opts, rng);
                            ++checked;
                            bool found = false;
                            for (const auto& member : valid)
                                if (member == r.edcs.membership()) {
                                    found = true;
                                    break;
                                }
                            if (!found) ++mismatches;
                        }
                }
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << checked << " constructions vs enumeration, " << mismatches << " mismatches, " << elapsed
      << " s";
    return {mismatches == 0 && elapsed < 120.0, d.str()};
}

// --- 3. Degree distribution gap --------------------------------------------
Outcome criterion_3() {
    const int n = 500;
    const std::int64_t beta = 40;
    const double lambda = 0.1;
    const double bound = 1.0 * std::log(static_cast<double>(n)) * std::sqrt(lambda) *
                         static_cast<double>(beta); // frozen calibration C = 1.0
    int failures = 0, max_gap = 0;
    const int pairs = 20;
    std::vector<int> gaps(pairs);
    parallel_for(pairs, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(100 + i);
        Graph g = gen_random_graph(n, 40.0 / (n - 1), grng);
        EdcsParams params(beta, 36);
        ConstructOptions qopts;
        ConstructOptions ropts;
        ropts.policy = ScanPolicy::RandomScan;
        ropts.start = StartSet::Random;
        Rng ra(2 * i + 1), rb(2 * i + 2);
        auto a = construct_edcs(g, params, qopts, ra);
        auto b = construct_edcs(g, params, ropts, rb);
        gaps[i] = degree_gap(a.edcs, b.edcs);
    });
    for (int gap : gaps) {
        max_gap = std::max(max_gap, gap);
        if (gap > bound) ++failures;
    }
    std::ostringstream d;
    d << pairs << " pairs, max gap " << max_gap << " vs bound " << bound << ", " << failures
      << " over";
    return {failures <= 1, d.str()};
}

// --- 4 & 5. EDCS coreset: matching ratio and vertex cover -------------------
struct CoresetStats {
    int ratio_ok = 0;
    int feasible = 0;
    int size_ok = 0;
    double min_ratio = 1e9;
    double elapsed = 0;
};

CoresetStats coreset_stats(int seeds) {
    CoresetStats st;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> ratios(seeds);
    std::vector<char> feas(seeds), size_ok(seeds);
    parallel_for(seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(1000 + i);
        Graph g = gen_random_bipartite(400, 400, 0.15, grng);
        auto sides = bipartite_sides(400, 400);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(5000 + i);
        auto r = edcs_coreset(g, CoresetParams::practice(4, 40, 36), run);
        const double opt = static_cast<double>(hopcroft_karp(g, sides).size());
        ratios[i] = static_cast<double>(compose_matching(g, r, solver).size()) / opt;
        VertexCover cover = compose_cover(g, r);
        feas[i] = is_cover(g, cover) ? 1 : 0;
        const double lower = static_cast<double>(greedy_maximal_matching(g).size());
        size_ok[i] = static_cast<double>(cover.size()) <= 4.5 * lower ? 1 : 0;
    });
    for (int i = 0; i < seeds; ++i) {
        st.min_ratio = std::min(st.min_ratio, ratios[i]);
        st.ratio_ok += ratios[i] >= 1.0 / 1.6 ? 1 : 0;
        st.feasible += feas[i];
        st.size_ok += size_ok[i];
    }
    st.elapsed = seconds_since(t0);
    return st;
}

CoresetStats& shared_coreset_stats() {
    static CoresetStats st = coreset_stats(100);
    return st;
}

Outcome criterion_4() {
    const auto& st = shared_coreset_stats();
    std::ostringstream d;
    d << "ratio >= 1/1.6 on " << st.ratio_ok << "/100 seeds (min " << st.min_ratio << "), "
      << st.elapsed << " s";
    return {st.ratio_ok >= 90 && st.elapsed < 300.0, d.str()};
}

Outcome criterion_5() {
    const auto& st = shared_coreset_stats();
    std::ostringstream d;
    d << "feasible " << st.feasible << "/100, size bound on " << st.size_ok << "/100";
    return {st.feasible == 100 && st.size_ok >= 90, d.str()};
}

// --- 6. Warm-up coreset bounds ----------------------------------------------
Outcome criterion_6() {
    const int mm_seeds = 50;
    std::vector<double> ratios(mm_seeds);
    parallel_for(mm_seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(2000 + i);
        Graph g = gen_random_bipartite(300, 300, 0.1, grng);
        auto sides = bipartite_sides(300, 300);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(7000 + i);
        auto r = maxmatching_coreset(g, 5, run, solver);
        const double opt = static_cast<double>(hopcroft_karp(g, sides).size());
        ratios[i] = static_cast<double>(compose_matching(g, r, solver).size()) / opt;
    });
    int mm_ok = 0;
    for (double r : ratios) mm_ok += r >= 1.0 / 3.0 ? 1 : 0;

    const int lb_seeds = 20;
    auto lb = gen_lowerbound_graph(2000, 10);
    std::vector<double> adv_ratio(lb_seeds), edcs_ratio(lb_seeds);
    parallel_for(lb_seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng run(3000 + i);
        Partition partition = random_k_partition(lb.graph, 10, run);
        std::vector<Edge> union_edges;
        for (int part_idx = 0; part_idx < 10; ++part_idx) {
            Graph part = part_graph(lb.graph, partition, part_idx);
            auto adv = adversarial_max_matching(part, lb);
            for (const auto& e : adv.matching.edges()) union_edges.push_back(e);
        }
        std::sort(union_edges.begin(), union_edges.end());
        union_edges.erase(std::unique(union_edges.begin(), union_edges.end()),
                          union_edges.end());
        Graph u(lb.graph.vertex_count(), std::move(union_edges));
        adv_ratio[i] = static_cast<double>(hopcroft_karp(u, lb.side).size()) / lb.matching_size;

        Rng erun(3500 + i);
        auto coreset = edcs_coreset(lb.graph, CoresetParams::practice(10, 40, 36), erun);
        edcs_ratio[i] = static_cast<double>(hopcroft_karp(coreset.union_graph, lb.side).size()) /
                        lb.matching_size;
    });
    int adv_ok = 0, separated = 0;
    double max_adv = 0;
    for (int i = 0; i < lb_seeds; ++i) {
        adv_ok += adv_ratio[i] <= 0.62 ? 1 : 0;
        separated += edcs_ratio[i] > adv_ratio[i] ? 1 : 0;
        max_adv = std::max(max_adv, adv_ratio[i]);
    }
    std::ostringstream d;
    d << "warm-up ratio >= 1/3 on " << mm_ok << "/" << mm_seeds << "; adversarial <= 0.62 on "
      << adv_ok << "/" << lb_seeds << " (max " << max_adv << "); separation on " << separated
      << "/" << lb_seeds;
    return {mm_ok == mm_seeds && adv_ok >= static_cast<int>(0.9 * lb_seeds) &&
                separated >= static_cast<int>(0.9 * lb_seeds),
            d.str()};
}

// --- 7. Recursive MPC driver -------------------------------------------------
Outcome criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    const int seeds = 50;
    std::vector<char> feas(seeds), strict(seeds), ratio_ok(seeds), depth_ok(seeds);
    parallel_for(seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(4000 + i);
        Graph g = gen_regular_ish(4000, 256, grng);
        MpcConfig cfg;
        cfg.seed = 8000 + i;
        cfg.base_threshold = 16;
        MpcRun run(cfg, g.vertex_count());
        auto res = parallel_algorithm(run, g, 256);
        feas[i] = is_matching(g, res.matching) && is_cover(g, res.cover) ? 1 : 0;
        bool s = true;
        for (std::size_t l = 1; l < res.levels.size(); ++l)
            s = s && res.levels[l].realized_delta < res.levels[l - 1].realized_delta;
        strict[i] = s ? 1 : 0;
        ratio_ok[i] = static_cast<double>(res.cover.size()) <=
                              8.0 * static_cast<double>(res.matching.size())
                          ? 1
                          : 0;
        depth_ok[i] = res.depth <= 4 ? 1 : 0;
    });
    int f = 0, st = 0, rk = 0, dp = 0;
    for (int i = 0; i < seeds; ++i) {
        f += feas[i];
        st += strict[i];
        rk += ratio_ok[i];
        dp += depth_ok[i];
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "feasible " << f << "/" << seeds << ", |V|<=8|M| " << rk << "/" << seeds << ", depth<=4 "
      << dp << "/" << seeds << ", strict-delta " << st << "/" << seeds << ", " << elapsed << " s";
    return {f == seeds && rk >= static_cast<int>(0.9 * seeds) && dp == seeds && st == seeds &&
                elapsed < 300.0,
            d.str()};
}

// --- 8. Memory law at theory-form parameters ---------------------------------
Outcome criterion_8() {
    // The published leading constants (200 ln n, 800 ln n) push p past 1 on
    // any desk-size instance, which collapses the sampling regime the claim
    // is about; the run keeps the functional forms with unit leading
    // constants so the O(s log^2 n) law is actually exercised.
    const int n = 2000, d = 1500;
    PedcsParams::TheoryConstants desk;
    desk.p_factor = 1.0;
    desk.k_factor = 1.0;
    const int seeds = 10;
    std::vector<std::size_t> violations(seeds);
    std::vector<std::int64_t> peaks(seeds);
    parallel_for(seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(600 + i);
        Graph g = gen_regular_ish(n, d, grng);
        auto params = PedcsParams::theory(n, d, n, desk);
        MpcConfig cfg;
        cfg.seed = 900 + i;
        cfg.s = n; // violation budget: s ln^2 n
        MpcRun run(cfg, n);
        parallel_edcs(run, g, d, params);
        violations[i] = run.trace().violations.size();
        peaks[i] = run.trace().peak_load();
    });
    std::size_t total_violations = 0;
    std::int64_t peak = 0;
    for (int i = 0; i < seeds; ++i) {
        total_violations += violations[i];
        peak = std::max(peak, peaks[i]);
    }
    MpcConfig budget_cfg;
    budget_cfg.s = n;
    std::ostringstream dd;
    dd << seeds << " seeds, peak load " << peak << " vs budget " << budget_cfg.memory_budget(n)
       << ", violations " << total_violations;
    return {total_violations == 0, dd.str()};
}

// --- 9. Iterated matching ----------------------------------------------------
Outcome criterion_9() {
    const int seeds = 30;
    std::vector<double> ratios(seeds);
    parallel_for(seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(5000 + i);
        Graph g = gen_random_bipartite(1000, 1000, 0.05, grng);
        auto sides = bipartite_sides(1000, 1000);
        MpcConfig cfg;
        cfg.seed = 9500 + i;
        cfg.base_threshold = 16;
        MpcRun run(cfg, g.vertex_count());
        Matching m = iterate_matching(run, g, 0.2);
        ratios[i] = static_cast<double>(m.size()) /
                    static_cast<double>(hopcroft_karp(g, sides).size());
    });
    int ok = 0;
    double min_ratio = 1e9;
    for (double r : ratios) {
        ok += r >= 1.0 / 2.3 ? 1 : 0;
        min_ratio = std::min(min_ratio, r);
    }
    std::ostringstream d;
    d << "ratio >= 1/2.3 on " << ok << "/" << seeds << " (min " << min_ratio << ")";
    return {ok >= static_cast<int>(0.9 * seeds), d.str()};
}

// --- 10. Streaming -----------------------------------------------------------
Outcome criterion_10() {
    const int seeds = 50;
    std::vector<char> ratio_ok(seeds), space_ok(seeds);
    parallel_for(seeds, Exec::OpenMP, [&](std::size_t i) {
        Rng grng(6000 + i);
        Graph g = gen_random_bipartite(500, 500, 0.1, grng);
        auto sides = bipartite_sides(500, 500);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(9900 + i);
        auto r = stream_coreset(g, 4 * g.vertex_count(), EdcsParams(40, 36), run,
                                StreamVariant::Edcs, solver);
        ratio_ok[i] = r.report.matching_ratio >= 1.0 / 1.6 ? 1 : 0;
        const double m = static_cast<double>(g.edge_count());
        const double bound =
            m / r.pieces + static_cast<double>(r.pieces) * g.vertex_count() * 40 / 2.0;
        space_ok[i] = static_cast<double>(r.peak_space) <= 1.1 * bound ? 1 : 0;
    });
    int rk = 0, sp = 0;
    for (int i = 0; i < seeds; ++i) {
        rk += ratio_ok[i];
        sp += space_ok[i];
    }
    std::ostringstream d;
    d << "ratio on " << rk << "/" << seeds << ", space bound on " << sp << "/" << seeds;
    return {rk >= static_cast<int>(0.9 * seeds) && sp == seeds, d.str()};
}

// --- 11. Determinism of the CLI ---------------------------------------------
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion_11() {
#ifndef EDCS_CLI_PATH
    return {false, "CLI path not configured"};
#else
    const auto dir = std::filesystem::temp_directory_path() / "edcs_acceptance_determinism";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string cli = EDCS_CLI_PATH;
    struct Job {
        std::string name;
        std::string args;
    };
    const std::vector<Job> jobs = {
        {"edcs-validate", "run --experiment edcs-validate --seeds 1..20"},
        {"maxmatching-coreset", "run --experiment maxmatching-coreset --seeds 1..5"},
        {"stream", "run --experiment stream --seeds 1..5"},
    };
    int identical = 0;
    for (const auto& job : jobs) {
        const auto a = dir / (job.name + ".a.csv");
        const auto b = dir / (job.name + ".b.csv");
        const std::string cmd_a = cli + " " + job.args + " --out " + a.string();
        const std::string cmd_b = cli + " " + job.args + " --out " + b.string();
        if (std::system(cmd_a.c_str()) != 0 || std::system(cmd_b.c_str()) != 0) continue;
        if (!slurp(a).empty() && slurp(a) == slurp(b)) ++identical;
    }
    std::filesystem::remove_all(dir);
    std::ostringstream d;
    d << identical << "/" << jobs.size() << " experiments byte-identical on re-run";
    return {identical == static_cast<int>(jobs.size()), d.str()};
#endif
}

using CriterionFn = Outcome (*)();

struct Criterion {
    const char* label;
    CriterionFn fn;
};

const Criterion kCriteria[] = {
    {"EDCS soundness (fuzzed constructions)", criterion_1},
    {"exhaustive micro-oracle on <= 5 vertices", criterion_2},
    {"degree distribution gap at frozen calibration", criterion_3},
    {"coreset matching ratio", criterion_4},
    {"coreset vertex cover feasibility and size", criterion_5},
    {"warm-up coreset bounds and adversarial lower bound", criterion_6},
    {"recursive MPC driver", criterion_7},
    {"memory law at theory-form parameters", criterion_8},
    {"iterated matching (2+eps)", criterion_9},
    {"streaming coreset ratio and space", criterion_10},
    {"CSV determinism", criterion_11},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
    bool all_pass = true;
    for (int i = 0; i < 11; ++i) {
        if (only != 0 && only != i + 1) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = kCriteria[i].fn();
        all_pass = all_pass && o.pass;
        std::printf("[%s] %2d/11 %s — %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                    kCriteria[i].label, o.details.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
