#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edcs/generators.hpp"
#include "edcs/graph.hpp"
#include "edcs/hashing.hpp"
#include "edcs/io.hpp"
#include "edcs/rng.hpp"
#include "edcs/sampling.hpp"

#include <cmath>
#include <set>
#include <sstream>

using namespace edcs;

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

} // namespace

TEST_CASE("graph validates structure") {
    Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edge(0) == Edge(0, 3)); // canonicalized and sorted
    CHECK(g.edge(1) == Edge(1, 2));
    CHECK(g.degree(3) == 1);
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(0, 1));

    long long degree_sum = 0;
    for (Vertex v = 0; v < 4; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * static_cast<long long>(g.edge_count()));

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("multigraph counts multiplicity and dedups") {
    Multigraph mg(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(mg.support_size() == 2);
    CHECK(mg.total_multiplicity() == 3);
    CHECK(mg.degree(1) == 3);
    CHECK(mg.degree(0) == 2);
    Graph d = mg.dedup();
    CHECK(d.edge_count() == 2);
    CHECK(d.degree(1) == 2);
}

TEST_CASE("rng is reproducible and children are independent streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c = Rng(42).child(7);
    Rng d = Rng(42).child(7);
    CHECK(c.next_u64() == d.next_u64());
    CHECK(Rng(42).child(7).next_u64() != Rng(42).child(8).next_u64());
}

TEST_CASE("edge_sample certainty cases") {
    Graph g = complete_graph(6);
    Rng rng(1);
    CHECK(edge_sample(g, 1.0, rng).edges() == g.edges());
    CHECK(edge_sample(g, 0.0, rng).edge_count() == 0);
}

TEST_CASE("edge_sample mean matches the binomial on K_100") {
    Graph g = complete_graph(100);
    double total = 0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(1000 + s);
        total += static_cast<double>(edge_sample(g, 0.5, rng).edge_count());
    }
    const double mean = total / seeds;
    const double sigma = std::sqrt(4950 * 0.25);
    CHECK(std::abs(mean - 2475.0) <= 3 * sigma);
}

TEST_CASE("edge_sample is monotone under coupled seeds") {
    Graph g = complete_graph(40);
    for (std::uint64_t seed : {3u, 17u, 92u}) {
        Rng r1(seed), r2(seed);
        Graph lo = edge_sample(g, 0.3, r1);
        Graph hi = edge_sample(g, 0.7, r2);
        for (const auto& e : lo.edges()) CHECK(hi.has_edge(e.u, e.v));
    }
}

TEST_CASE("vertex_sample certainty and induced-subgraph semantics") {
    Graph g = triangle();
    Rng rng(5);
    auto all = vertex_sample(g, 1.0, rng);
    CHECK(all.graph.edges() == g.edges());
    auto none = vertex_sample(g, 0.0, rng);
    CHECK(none.graph.edge_count() == 0);
    for (char kept : none.kept) CHECK(kept == 0);

    // Find a seed whose draw keeps exactly {0, 1}: the induced graph must be
    // the single edge between them.
    for (std::uint64_t seed = 0;; ++seed) {
        REQUIRE(seed < 1000);
        Rng r(seed);
        auto s = vertex_sample(g, 0.5, r);
        if (s.kept[0] && s.kept[1] && !s.kept[2]) {
            CHECK(s.graph.edge_count() == 1);
            CHECK(s.graph.has_edge(0, 1));
            break;
        }
    }
}

TEST_CASE("random_k_partition totality and disjointness") {
    Graph g = complete_graph(12);
    Rng rng(9);
    Partition part = random_k_partition(g, 5, rng);
    REQUIRE(part.part_of.size() == g.edge_count());
    std::size_t total = 0;
    for (auto s : part.part_sizes()) total += s;
    CHECK(total == g.edge_count());
    for (int p : part.part_of) {
        CHECK(p >= 0);
        CHECK(p < 5);
    }

    Rng rng1(11);
    Partition one = random_k_partition(g, 1, rng1);
    for (int p : one.part_of) CHECK(p == 0);

    Rng rng0(12);
    CHECK_THROWS_AS(random_k_partition(g, 0, rng0), std::invalid_argument);
}

TEST_CASE("random_k_partition part sizes match binomial on K_100") {
    Graph g = complete_graph(100);
    const int seeds = 200;
    std::vector<double> mean(4, 0.0);
    for (int s = 0; s < seeds; ++s) {
        Rng rng(40 + s);
        auto sizes = random_k_partition(g, 4, rng).part_sizes();
        for (int i = 0; i < 4; ++i) mean[i] += static_cast<double>(sizes[i]);
    }
    const double sigma = std::sqrt(4950.0 * 0.25 * 0.75); // ~30.5
    for (int i = 0; i < 4; ++i) CHECK(std::abs(mean[i] / seeds - 1237.5) <= 3 * sigma);
}

TEST_CASE("kwise hash basics") {
    Rng rng(3);
    KWiseHash constant(1, 10, rng);
    for (std::uint64_t x = 0; x < 50; ++x) CHECK(constant(x) == constant.coeffs()[0] % 10);

    KWiseHash unit(3, 1, rng);
    for (std::uint64_t x = 0; x < 50; ++x) CHECK(unit(x) == 0);

    CHECK_THROWS_AS(KWiseHash(0, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(KWiseHash(2, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(KWiseHash(2, KWiseHash::kPrime + 1, rng), std::invalid_argument);
}

TEST_CASE("pairwise independence of the degree-1 hash") {
    const int trials = 100000;
    int both_zero = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(5000 + t);
        KWiseHash h(2, 2, rng);
        if (h(0) == 0 && h(1) == 0) ++both_zero;
    }
    const double freq = static_cast<double>(both_zero) / trials;
    CHECK(std::abs(freq - 0.25) <= 0.01);
}

TEST_CASE("hash output passes chi-square uniformity at alpha=0.001") {
    // Critical values for df = range-1 at significance 0.001.
    struct Case {
        std::uint64_t range;
        double critical;
    };
    for (auto [range, critical] : {Case{2, 10.828}, Case{16, 37.697}, Case{101, 149.449}}) {
        Rng rng(777 + range);
        KWiseHash h(5, range, rng);
        const int draws = 100000;
        std::vector<int> bins(range, 0);
        for (int x = 0; x < draws; ++x) ++bins[h(static_cast<std::uint64_t>(x))];
        const double expected = static_cast<double>(draws) / static_cast<double>(range);
        double chi2 = 0;
        for (int b : bins) chi2 += (b - expected) * (b - expected) / expected;
        INFO("range ", range, " chi2 ", chi2);
        CHECK(chi2 <= critical);
    }
}

TEST_CASE("generators hit their contracts") {
    Rng rng(21);
    Graph k33 = gen_random_bipartite(3, 3, 1.0, rng);
    CHECK(k33.edge_count() == 9);

    Graph empty = gen_random_graph(5, 0.0, rng);
    CHECK(empty.edge_count() == 0);

    Graph reg = gen_regular_ish(100, 10, rng);
    for (Vertex v = 0; v < 100; ++v) {
        CHECK(reg.degree(v) >= 8);
        CHECK(reg.degree(v) <= 12);
    }

    Graph odd = gen_regular_ish(50, 7, rng);
    for (Vertex v = 0; v < 50; ++v) CHECK(odd.degree(v) == 7);

    Rng r1(33), r2(33);
    CHECK(gen_random_graph(30, 0.2, r1).edges() == gen_random_graph(30, 0.2, r2).edges());
}

TEST_CASE("lowerbound generator sizes") {
    auto lb = gen_lowerbound_graph(8, 4);
    CHECK(lb.graph.vertex_count() == 18); // |L1|=6, |L2|=|R1|=|R2|=4
    CHECK(lb.graph.edge_count() == 32);   // 6*4 + 4 + 4
    int l1 = 0;
    for (auto layer : lb.layer)
        if (layer == LowerboundLayer::L1) ++l1;
    CHECK(l1 == 6);
    CHECK(lb.matching_size == 8);
    CHECK_THROWS_AS(gen_lowerbound_graph(10, 4), std::invalid_argument);
}

TEST_CASE("graph file round trip is byte stable") {
    Graph g(5, {{4, 0}, {1, 2}, {0, 3}});
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "5 3\n0 3\n0 4\n1 2\n");
    std::istringstream in(out.str());
    Graph back = read_graph(in);
    CHECK(back.edges() == g.edges());

    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_WITH_AS(read_graph(loop), doctest::Contains("self-loop"), std::runtime_error);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_WITH_AS(read_graph(dup), doctest::Contains("duplicate"), std::runtime_error);
    std::istringstream range("2 1\n0 5\n");
    CHECK_THROWS_WITH_AS(read_graph(range), doctest::Contains("out of range"), std::runtime_error);
}
