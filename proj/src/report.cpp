#include "edcs/report.hpp"

#include <json.hpp>

namespace edcs {

std::string to_json(const ApproxReport& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["matching_size"] = r.matching_size;
    j["cover_size"] = r.cover_size;
    j["oracle_mm"] = r.oracle_mm;
    j["oracle_vc"] = r.oracle_vc_is_bound ? nlohmann::json("oracle unavailable") // lower bound used
                                          : nlohmann::json(r.oracle_vc);
    j["oracle_vc_lower_bound"] = r.oracle_vc;
    j["matching_ratio"] = r.matching_ratio;
    j["cover_ratio"] = r.cover_ratio;
    j["max_part_edges"] = r.max_part_edges;
    j["union_edges"] = r.union_edges;
    j["communication"] = r.communication;
    return j.dump(2);
}

} // namespace edcs
