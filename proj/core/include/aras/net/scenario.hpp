#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aras/attack/config.hpp"
#include "aras/config.hpp"
#include "aras/net/types.hpp"

namespace aras::net {

// Declarative description of one experiment: topology, traffic, attacks and
// the assessment tuning block. Everything a run needs lives in one document.
struct Scenario {
    std::string name;
    std::uint64_t master_seed = 0;
    std::vector<NodeSpec> nodes;
    std::vector<LinkSpec> links;
    std::vector<FlowSpec> flows;
    std::vector<attack::AttackConfig> attacks;
    AssessmentConfig assessment;
};

// Parses and validates a scenario document. Unknown keys anywhere are a
// ValidationError; malformed JSON is a ParseError. Validation errors carry
// the document path of the offending field.
Scenario load_scenario(std::string_view bytes);

// Reads the file, then load_scenario. Throws IoError if unreadable.
Scenario load_scenario_file(const std::filesystem::path& path);

}  // namespace aras::net
