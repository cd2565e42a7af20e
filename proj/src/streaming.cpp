#include "edcs/streaming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edcs {

StreamResult stream_coreset(const Graph& g, std::int64_t s_target, const EdcsParams& params,
                            Rng& rng, StreamVariant variant, const Solver& solver) {
    if (s_target < g.vertex_count())
        throw std::invalid_argument("stream_coreset: s_target must be at least n");
    const auto m = static_cast<std::int64_t>(g.edge_count());

    std::vector<std::size_t> arrival(g.edge_count());
    std::iota(arrival.begin(), arrival.end(), std::size_t{0});
    for (std::size_t i = arrival.size(); i > 1; --i)
        std::swap(arrival[i - 1], arrival[rng.next_below(i)]);

    const int k = std::max(
        1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m) /
                                                static_cast<double>(s_target)))));
    const std::int64_t piece_len = m / k;

    StreamResult out;
    out.pieces = k;
    std::vector<Edge> accumulated;
    std::int64_t consumed = 0;

    for (int piece = 0; piece < k; ++piece) {
        const std::int64_t len = piece == k - 1 ? m - consumed : piece_len;
        std::vector<Edge> buffer;
        buffer.reserve(static_cast<std::size_t>(len));
        for (std::int64_t i = 0; i < len; ++i)
            buffer.push_back(g.edge(arrival[static_cast<std::size_t>(consumed++)]));
        out.piece_sizes.push_back(len);

        Graph piece_graph(g.vertex_count(), std::move(buffer));
        std::vector<Edge> coreset;
        if (variant == StreamVariant::Edcs) {
            Rng piece_rng = rng.child(piece);
            coreset = construct_edcs(piece_graph, params, piece_rng).edcs.edge_list();
        } else {
            coreset = solve_matching(piece_graph, solver).edges();
        }
        out.coreset_sizes.push_back(static_cast<std::int64_t>(coreset.size()));
        accumulated.insert(accumulated.end(), coreset.begin(), coreset.end());
        out.peak_space = std::max(out.peak_space,
                                  len + static_cast<std::int64_t>(accumulated.size()));
    }

    out.accumulated = Graph(g.vertex_count(), std::move(accumulated));
    out.report.algorithm = variant == StreamVariant::Edcs ? "stream-edcs" : "stream-maxmatching";
    out.report.seed = rng.seed();
    out.report.matching_size = static_cast<std::int64_t>(solve_matching(out.accumulated, solver).size());
    out.report.oracle_mm = static_cast<std::int64_t>(solve_matching(g, solver).size());
    out.report.union_edges = static_cast<std::int64_t>(out.accumulated.edge_count());
    out.report.communication = out.report.union_edges;
    out.report.max_part_edges = *std::max_element(out.coreset_sizes.begin(), out.coreset_sizes.end());
    out.report.finalize_ratios();
    return out;
}

} // namespace edcs
