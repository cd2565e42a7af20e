#pragma once

#include <cstdint>
#include <string>

namespace edcs {

// Measured solution sizes against oracle optima for one (instance, seed)
// run. oracle_vc_is_bound marks the vertex-cover reference as a lower bound
// (maximal-matching size) rather than an exact optimum.
struct ApproxReport {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::int64_t matching_size = -1;
    std::int64_t cover_size = -1;
    std::int64_t oracle_mm = -1;
    std::int64_t oracle_vc = -1;
    bool oracle_vc_is_bound = false;
    double matching_ratio = 0.0; // matching_size / oracle_mm
    double cover_ratio = 0.0;    // cover_size / oracle_vc
    std::int64_t max_part_edges = 0;
    std::int64_t union_edges = 0;
    std::int64_t communication = 0; // sum of coreset sizes

    void finalize_ratios() {
        if (oracle_mm > 0) matching_ratio = static_cast<double>(matching_size) / oracle_mm;
        if (oracle_vc > 0) cover_ratio = static_cast<double>(cover_size) / oracle_vc;
    }
};

std::string to_json(const ApproxReport& r);

} // namespace edcs
