#pragma once

#include "edcs/coreset.hpp"
#include "edcs/edcs.hpp"
#include "edcs/graph.hpp"
#include "edcs/report.hpp"
#include "edcs/rng.hpp"

#include <cstdint>

namespace edcs {

enum class StreamVariant { Edcs, MaxMatching };

struct StreamResult {
    Graph accumulated;         // union of per-piece coresets
    ApproxReport report;
    std::int64_t peak_space = 0; // max over time of buffered piece + coresets
    int pieces = 0;              // k = ceil(sqrt(m / s_target))
    std::vector<std::int64_t> piece_sizes;
    std::vector<std::int64_t> coreset_sizes;
};

// Single-pass random-arrival stream: the edges arrive in a seeded uniform
// permutation, split into k = ceil(sqrt(m/s_target)) consecutive pieces of
// floor(m/k) edges (last takes the remainder). Each piece is buffered,
// summarized (EDCS or maximum matching), appended to the accumulator and
// freed. The edge sequence is consumed by a forward-only sweep. Requires
// s_target >= n.
StreamResult stream_coreset(const Graph& g, std::int64_t s_target, const EdcsParams& params,
                            Rng& rng, StreamVariant variant, const Solver& solver);

} // namespace edcs
