#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aras/config.hpp"
#include "aras/discovery/discovery.hpp"
#include "aras/level.hpp"
#include "aras/net/network.hpp"
#include "aras/version.hpp"

namespace aras::vuln {

// Knowledge-base entry: a weakness in a product version range.
struct VulnRecord {
    std::string id;
    std::string product;
    Version version_min;
    Version version_max;  // inclusive
    double base_score = 0.0;  // 0..10
    std::string description;
    bool exploit_available = false;
};

using VulnKb = std::vector<VulnRecord>;

VulnKb load_vuln_kb(std::string_view bytes);                    // throws ParseError/ValidationError
VulnKb load_vuln_kb_file(const std::filesystem::path& path);    // throws IoError
// Small bundled knowledge base used when a scenario names no KB file.
const VulnKb& builtin_vuln_kb();

struct VulnerabilityFinding {
    std::string asset;     // node id
    std::string vuln;      // VulnRecord id
    std::string product;
    Version version;
    double base_score = 0.0;
    double effective_score = 0.0;
    Level severity = Level::Low;
    bool exploit_available = false;
    std::string description;
};

// effective = min(10, base + sensitivity bonus); severity from the policy
// cut-points. Throws OutOfRangeError for base_score outside [0, 10].
std::pair<Level, double> classify(double base_score, Level sensitivity,
                                  const ClassifyPolicy& policy = {});

// Matches every profiled asset's software against the KB and classifies each
// hit. Sorted by severity desc, effective score desc, asset asc, vuln id asc.
std::vector<VulnerabilityFinding> scan(const std::vector<discovery::AssetProfile>& profiles,
                                       const net::NetworkState& net, const VulnKb& kb,
                                       const ClassifyPolicy& policy = {});

}  // namespace aras::vuln
