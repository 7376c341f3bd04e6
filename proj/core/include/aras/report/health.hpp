#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aras/net/network.hpp"

namespace aras::report {

struct LinkLoad {
    std::string a;
    std::string b;
    std::string link_class;
    std::uint64_t packets = 0;
};

struct HealthReport {
    std::vector<std::string> articulation_points;    // sorted node ids
    std::vector<LinkLoad> links;                     // per-link offered packets
    std::vector<LinkLoad> max_utilization;           // the busiest links
    std::vector<std::pair<std::string, std::string>> unreachable_flows;  // (src, dst)
};

// Bottleneck and point-of-failure analysis over the built topology:
// articulation points, per-link load, and flow pairs with no path.
HealthReport network_health(const net::NetworkState& net);

}  // namespace aras::report
