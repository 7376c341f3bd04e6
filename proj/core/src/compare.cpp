#include "aras/report/compare.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "aras/report/report.hpp"

namespace aras::report {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::map<std::string, std::optional<double>> flow_pdrs(const json& doc) {
    std::map<std::string, std::optional<double>> out;
    for (const json& f : doc["metrics"]["flows"]) {
        std::string key = f["src"].get<std::string>() + "->" + f["dst"].get<std::string>();
        if (f.contains("pdr") && f["pdr"].is_number())
            out[key] = f["pdr"].get<double>();
        else
            out[key] = std::nullopt;
    }
    return out;
}

std::map<std::pair<std::string, std::string>, RiskDelta> risk_index(const json& doc) {
    std::map<std::pair<std::string, std::string>, RiskDelta> out;
    for (const json& e : doc["risk_register"]) {
        RiskDelta d{e["asset"].get<std::string>(), e["threat_name"].get<std::string>(),
                    e["risk_score"].get<double>(), e["mitigation"].get<std::string>()};
        out[{d.asset, d.threat}] = d;
    }
    return out;
}

void sort_by_score(std::vector<RiskDelta>& risks) {
    std::stable_sort(risks.begin(), risks.end(), [](const RiskDelta& a, const RiskDelta& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.asset != b.asset) return a.asset < b.asset;
        return a.threat < b.threat;
    });
}

std::string fmt_pdr(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string("n/a");
}

}  // namespace

CompareResult compare_reports(const json& base, const json& other) {
    check_report_schema(base);
    check_report_schema(other);

    CompareResult result;
    result.base_name = base["scenario"]["name"].get<std::string>();
    result.other_name = other["scenario"]["name"].get<std::string>();

    auto base_flows = flow_pdrs(base);
    auto other_flows = flow_pdrs(other);
    std::set<std::string> keys;
    for (const auto& [k, v] : base_flows) keys.insert(k);
    for (const auto& [k, v] : other_flows) keys.insert(k);
    for (const std::string& key : keys) {
        FlowDelta d;
        d.key = key;
        if (auto it = base_flows.find(key); it != base_flows.end()) d.base_pdr = it->second;
        if (auto it = other_flows.find(key); it != other_flows.end()) d.other_pdr = it->second;
        d.delta = d.other_pdr.value_or(0.0) - d.base_pdr.value_or(0.0);
        result.flows.push_back(std::move(d));
    }

    auto base_risks = risk_index(base);
    auto other_risks = risk_index(other);
    for (const auto& [key, entry] : other_risks)
        if (!base_risks.count(key)) result.new_risks.push_back(entry);
    for (const auto& [key, entry] : base_risks)
        if (!other_risks.count(key)) result.dropped_risks.push_back(entry);
    sort_by_score(result.new_risks);
    sort_by_score(result.dropped_risks);

    result.base_anomalies = base["anomalies"].size();
    result.other_anomalies = other["anomalies"].size();
    return result;
}

std::string format_compare(const CompareResult& result) {
    std::string out = "compare: " + result.base_name + " vs " + result.other_name + "\n";
    out += "flows:\n";
    if (result.flows.empty()) out += "  (none)\n";
    for (const FlowDelta& f : result.flows) {
        out += "  " + f.key + "  pdr " + fmt_pdr(f.base_pdr) + " -> " + fmt_pdr(f.other_pdr);
        if (f.delta != 0.0) out += "  (" + fmt_double(f.delta) + ")";
        out += "\n";
    }
    out += "new risks:\n";
    if (result.new_risks.empty()) out += "  (none)\n";
    for (const RiskDelta& r : result.new_risks)
        out += "  " + r.asset + "  " + r.threat + "  score " + fmt_double(r.score) + "  " +
               r.mitigation + "\n";
    out += "dropped risks:\n";
    if (result.dropped_risks.empty()) out += "  (none)\n";
    for (const RiskDelta& r : result.dropped_risks)
        out += "  " + r.asset + "  " + r.threat + "  score " + fmt_double(r.score) + "  " +
               r.mitigation + "\n";
    out += "anomalies: " + std::to_string(result.base_anomalies) + " -> " +
           std::to_string(result.other_anomalies) + "\n";
    return out;
}

}  // namespace aras::report
