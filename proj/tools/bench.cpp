// Benchmark: the per-part / per-machine kernels run either serially or
// under OpenMP. Reports wall time for both paths and verifies the outputs
// are identical (each slot derives its own child seed, so scheduling cannot
// change results).

#include "edcs/coreset.hpp"
#include "edcs/generators.hpp"
#include "edcs/mpc.hpp"
#include "edcs/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace edcs;

namespace {

double timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double omp_ms, bool equal) {
    std::printf("%-28s serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   identical %s\n",
                name.c_str(), serial_ms, omp_ms, serial_ms / omp_ms, equal ? "yes" : "NO");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", thread_count());

    {
        Rng grng(1);
        Graph g = gen_random_bipartite(800, 800, 0.05, grng);
        auto params = CoresetParams::practice(8, 40, 36);
        CoresetResult serial_out, omp_out;
        double ts = timed([&] {
            Rng run(7);
            serial_out = edcs_coreset(g, params, run, Exec::Serial);
        });
        double tp = timed([&] {
            Rng run(7);
            omp_out = edcs_coreset(g, params, run, Exec::OpenMP);
        });
        report("edcs_coreset k=8", ts, tp,
               serial_out.union_graph.edges() == omp_out.union_graph.edges());
    }

    {
        Rng grng(2);
        Graph g = gen_regular_ish(4000, 64, grng);
        auto params = PedcsParams::practice(0.25, 80, 8, 8, 0.25);
        Multigraph serial_c, omp_c;
        double ts = timed([&] {
            MpcConfig cfg;
            cfg.seed = 9;
            MpcRun run(cfg, g.vertex_count());
            serial_c = parallel_edcs(run, g, 64, params, Exec::Serial).c;
        });
        double tp = timed([&] {
            MpcConfig cfg;
            cfg.seed = 9;
            MpcRun run(cfg, g.vertex_count());
            omp_c = parallel_edcs(run, g, 64, params, Exec::OpenMP).c;
        });
        report("parallel_edcs k=80", ts, tp, serial_c.support() == omp_c.support());
    }

    {
        // Seed fan-out over independent constructions.
        Rng grng(3);
        Graph g = gen_random_graph(400, 0.1, grng);
        const int seeds = 32;
        std::vector<std::size_t> sizes_serial(seeds), sizes_omp(seeds);
        auto sweep = [&](Exec exec, std::vector<std::size_t>& out) {
            parallel_for(seeds, exec, [&](std::size_t i) {
                Rng rng = Rng(100).child(i);
                out[i] = construct_edcs(g, EdcsParams(20, 18), rng).edcs.size();
            });
        };
        double ts = timed([&] { sweep(Exec::Serial, sizes_serial); });
        double tp = timed([&] { sweep(Exec::OpenMP, sizes_omp); });
        report("construct_edcs x32 seeds", ts, tp, sizes_serial == sizes_omp);
    }

    return 0;
}
