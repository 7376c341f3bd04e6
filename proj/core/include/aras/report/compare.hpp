#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace aras::report {

// Per-flow delivery delta between two report documents. Flows are keyed
// "src->dst"; a flow missing on one side keeps that side's optional empty.
struct FlowDelta {
    std::string key;
    std::optional<double> base_pdr;
    std::optional<double> other_pdr;
    double delta = 0.0;
};

struct RiskDelta {
    std::string asset;
    std::string threat;
    double score = 0.0;
    std::string mitigation;
};

struct CompareResult {
    std::string base_name;
    std::string other_name;
    std::vector<FlowDelta> flows;
    // Risks present only in the second report, highest score first.
    std::vector<RiskDelta> new_risks;
    std::vector<RiskDelta> dropped_risks;
    std::size_t base_anomalies = 0;
    std::size_t other_anomalies = 0;
};

// Both documents must pass check_report_schema; throws SchemaMismatchError
// otherwise.
CompareResult compare_reports(const nlohmann::json& base, const nlohmann::json& other);

std::string format_compare(const CompareResult& result);

}  // namespace aras::report
