#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edcs/coreset.hpp"
#include "edcs/generators.hpp"
#include "edcs/io.hpp"
#include "edcs/oracles.hpp"

#include <filesystem>
#include <fstream>

using namespace edcs;

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

} // namespace

TEST_CASE("maxmatching coreset with a single part is exact") {
    Rng rng(1);
    Graph g = gen_random_bipartite(20, 20, 0.3, rng);
    auto sides = bipartite_sides(20, 20);
    Solver solver{SolverKind::HopcroftKarp, &sides};
    Rng run(2);
    auto r = maxmatching_coreset(g, 1, run, solver);
    auto rep = compose_and_solve(g, r, Problem::Matching, solver);
    CHECK(rep.matching_ratio == doctest::Approx(1.0));

    Graph empty(10, {});
    Rng run2(3);
    auto re = maxmatching_coreset(empty, 4, run2, Solver{SolverKind::Greedy});
    for (const auto& part : re.parts) CHECK(part.empty());
}

TEST_CASE("maxmatching coreset ratio stays within [1/3, 1]") {
    const int seeds = 50;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(100 + s);
        Graph g = gen_random_bipartite(60, 60, 0.1, rng);
        auto sides = bipartite_sides(60, 60);
        Solver solver{SolverKind::HopcroftKarp, &sides};
        Rng run(500 + s);
        auto r = maxmatching_coreset(g, 5, run, solver);
        auto rep = compose_and_solve(g, r, Problem::Matching, solver);
        CHECK(rep.matching_ratio >= 1.0 / 3.0);
        CHECK(rep.matching_ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("edcs coreset basics") {
    // k = 1 reduces to a single construction.
    Rng rng(5);
    Graph g = gen_random_bipartite(30, 30, 0.2, rng);
    auto params = CoresetParams::practice(1, 10, 9);
    Rng run(6);
    auto r = edcs_coreset(g, params, run);
    Edcs as_edcs(g, params.edcs, [&] {
        std::vector<char> member(g.edge_count(), 0);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            member[i] = r.union_graph.has_edge(g.edge(i).u, g.edge(i).v) ? 1 : 0;
        return member;
    }());
    CHECK(validate_edcs(as_edcs).empty());

    // A single edge lands in exactly one part and is forced into it.
    Graph one(2, {{0, 1}});
    Rng run2(7);
    auto r1 = edcs_coreset(one, CoresetParams::practice(4, 2, 1), run2);
    CHECK(r1.union_graph.edge_count() == 1);
    std::size_t nonempty = 0;
    for (const auto& part : r1.parts) nonempty += part.empty() ? 0 : 1;
    CHECK(nonempty == 1);
}

TEST_CASE("coreset size bounds: per-part degree <= beta") {
    Rng rng(9);
    Graph g = gen_random_bipartite(50, 50, 0.3, rng);
    auto params = CoresetParams::practice(4, 8, 7);
    Rng run(10);
    auto r = edcs_coreset(g, params, run);
    for (const auto& part : r.parts) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (const auto& e : part) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int d : deg) CHECK(d <= params.edcs.beta);
        CHECK(2 * static_cast<std::int64_t>(part.size()) <=
              static_cast<std::int64_t>(g.vertex_count()) * params.edcs.beta);
    }
}

TEST_CASE("union of part subgraphs validates at fitted composed bounds") {
    int pass = 0;
    const int seeds = 10;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(300 + s);
        Graph g = gen_random_bipartite(400, 400, 0.15, rng);
        auto params = CoresetParams::practice(4, 40, 36);
        Rng run(900 + s);
        auto r = edcs_coreset(g, params, run);
        auto fitted = fit_lambda_c(g, r.union_graph,
                                   static_cast<double>(params.k) *
                                       static_cast<double>(params.edcs.beta),
                                   /*p2_factor=*/2.0, /*lambda_max=*/0.35);
        if (fitted.has_value()) ++pass;
    }
    CHECK(pass == seeds);
}

TEST_CASE("theory schedule composes validly") {
    // Theory-mode beta saturates far above any realizable degree, so each
    // part keeps all of its edges and the union is the host; the composed
    // bounds at the scheduled lambda_C must validate.
    Rng grng(21);
    Graph g = gen_random_bipartite(40, 40, 0.3, grng);
    auto params = CoresetParams::theory(3, 0.5, g.vertex_count());
    CHECK(params.edcs.beta >= 2 * (g.vertex_count() - 1));
    Rng run(22);
    auto r = edcs_coreset(g, params, run);
    CHECK(r.union_graph.edge_count() == g.edge_count());
    EdcsParams composed = params.composed(params.scheduled_lambda_c(g.vertex_count()));
    Edcs as_edcs(g, composed, std::vector<char>(g.edge_count(), 1));
    CHECK(validate_edcs(as_edcs).empty());
}

TEST_CASE("composing with beta >= 2 Delta reproduces the host") {
    Graph g = complete_graph(10); // Delta = 9
    auto params = CoresetParams::practice(1, 2 * 9, 2 * 9 - 1);
    Rng run(11);
    auto r = edcs_coreset(g, params, run);
    CHECK(r.union_graph.edge_count() == g.edge_count());
    auto rep = compose_and_solve(g, r, Problem::Matching, Solver{SolverKind::BruteForce});
    CHECK(rep.matching_ratio == doctest::Approx(1.0));
}

TEST_CASE("coreset cover is feasible on the host") {
    for (int s = 0; s < 10; ++s) {
        Rng rng(40 + s);
        Graph g = gen_random_bipartite(80, 80, 0.15, rng);
        auto params = CoresetParams::practice(4, 12, 10);
        Rng run(70 + s);
        auto r = edcs_coreset(g, params, run);
        VertexCover cover = compose_cover(g, r);
        CHECK(is_cover(g, cover));
    }
}

TEST_CASE("adversarial matching avoids L2-R2 edges when possible") {
    // Part with one L1-R2 edge and one L2-R2 edge sharing the R2 endpoint:
    // both are maximum, the adversary returns the L1-R2 one.
    auto lb = gen_lowerbound_graph(8, 4); // L1 [0,6), L2 [6,10), R1 [10,14), R2 [14,18)
    Graph part(18, {{0, 14}, {6, 14}});
    auto adv = adversarial_max_matching(part, lb);
    REQUIRE(adv.matching.size() == 1);
    CHECK(adv.matching.edges()[0] == Edge(0, 14));
    CHECK_FALSE(adv.forced_l2r2);

    // Only one L2-R2 edge and nothing else: unavoidable, flagged.
    Graph forced(18, {{6, 14}});
    auto f = adversarial_max_matching(forced, lb);
    CHECK(f.matching.size() == 1);
    CHECK(f.forced_l2r2);
}

TEST_CASE("lower bound separation at small scale") {
    // Demo-sized version of the n=2000 experiment: the adversarial
    // per-part maximum matchings stay near ratio 1/2 + 1/k while the EDCS
    // pipeline clears it.
    const int n = 400, k = 4;
    int separated = 0;
    const int seeds = 5;
    for (int s = 0; s < seeds; ++s) {
        auto lb = gen_lowerbound_graph(n, k);
        Rng run(800 + s);
        Partition partition = random_k_partition(lb.graph, k, run);
        std::vector<Edge> union_edges;
        for (int i = 0; i < k; ++i) {
            Graph part = part_graph(lb.graph, partition, i);
            auto adv = adversarial_max_matching(part, lb);
            for (const auto& e : adv.matching.edges()) union_edges.push_back(e);
        }
        std::sort(union_edges.begin(), union_edges.end());
        union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
        Graph adv_union(lb.graph.vertex_count(), std::move(union_edges));
        const double adv_ratio =
            static_cast<double>(hopcroft_karp(adv_union, lb.side).size()) / lb.matching_size;
        CHECK(adv_ratio <= 0.5 + 1.0 / k + 0.05);

        Rng erun(900 + s);
        auto ecoreset = edcs_coreset(lb.graph, CoresetParams::practice(k, 40, 36), erun);
        const double edcs_ratio =
            static_cast<double>(hopcroft_karp(ecoreset.union_graph, lb.side).size()) /
            lb.matching_size;
        if (edcs_ratio > adv_ratio) ++separated;
    }
    CHECK(separated == seeds);
}

TEST_CASE("coreset directory serialization") {
    Rng rng(5);
    Graph g = gen_random_bipartite(10, 10, 0.4, rng);
    auto sides = bipartite_sides(10, 10);
    Solver solver{SolverKind::HopcroftKarp, &sides};
    Rng run(6);
    auto r = maxmatching_coreset(g, 3, run, solver);
    auto rep = compose_and_solve(g, r, Problem::Matching, solver);

    auto dir = std::filesystem::temp_directory_path() / "edcs_coreset_test";
    std::filesystem::remove_all(dir);
    write_coreset_dir(dir, g, r, &rep);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    CHECK(std::filesystem::exists(dir / "union.txt"));
    for (int i = 0; i < 3; ++i)
        CHECK(std::filesystem::exists(dir / ("part_" + std::to_string(i) + ".txt")));
    Graph back = read_graph_file(dir / "union.txt");
    CHECK(back.edges() == r.union_graph.edges());
    std::filesystem::remove_all(dir);
}

TEST_CASE("serial and parallel part loops produce identical coresets") {
    Rng rng(15);
    Graph g = gen_random_bipartite(60, 60, 0.2, rng);
    auto params = CoresetParams::practice(6, 10, 9);
    Rng run_a(44), run_b(44);
    auto serial = edcs_coreset(g, params, run_a, Exec::Serial);
    auto parallel = edcs_coreset(g, params, run_b, Exec::OpenMP);
    CHECK(serial.union_graph.edges() == parallel.union_graph.edges());
    CHECK(serial.parts == parallel.parts);
    CHECK(serial.fixed_vertices == parallel.fixed_vertices);
}
