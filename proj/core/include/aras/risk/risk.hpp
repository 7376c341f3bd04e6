#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aras/config.hpp"
#include "aras/discovery/discovery.hpp"
#include "aras/level.hpp"
#include "aras/net/network.hpp"
#include "aras/report/metrics.hpp"
#include "aras/vuln/vuln.hpp"

namespace aras::risk {

struct RiskCriteria {
    std::vector<ImpactArea> areas;  // ranks are a permutation of 1..n

    std::uint64_t rank_sum() const;
    // Highest possible risk score: probability 3 x all impacts high.
    std::uint64_t score_max() const { return 9 * rank_sum(); }
};

// Validates that area names are unique and ranks form a permutation of 1..n.
// Throws DuplicateAreaError / BadRanksError.
RiskCriteria define_criteria(const std::vector<ImpactArea>& areas);

enum class ThreatSource { Kb, Simulation, IsoCheck };
std::string_view to_string(ThreatSource s);

enum class ConcernKind { LongLifecycle, Heterogeneity, VendorMix, ConstrainedDevice };
std::string_view to_string(ConcernKind k);

struct Concern {
    std::string asset;
    ConcernKind kind = ConcernKind::LongLifecycle;
    std::string detail;
};

struct Evidence {
    std::string flow;  // "src->dst"
    double pdr = 0.0;
    double dr = 0.0;
};

struct ThreatScenario {
    std::string id;
    std::string asset;
    ThreatSource source = ThreatSource::Kb;
    std::string threat_name;
    std::string consequence;
    std::optional<Evidence> evidence;   // simulation-sourced scenarios carry it
    bool exploit_available = false;     // kb-sourced only
    std::map<std::string, Level> impacts;  // per area name, from the threat KB
    bool financial_only = false;
};

// Threat knowledge base: how findings, attack evidence and control concerns
// turn into named threats with default impact values.
struct FindingThreat {
    std::string id;
    std::string name;
    std::string consequence;
    bool requires_exploit = false;
    std::vector<net::NodeClass> applies_classes;  // empty = any class
    Level min_severity = Level::Low;
    std::map<std::string, Level> impacts;
    bool financial_only = false;
};

struct ThreatTemplate {
    std::string name;
    std::string consequence;
    std::map<std::string, Level> impacts;
    bool financial_only = false;
};

struct ThreatKb {
    std::vector<FindingThreat> finding_threats;
    ThreatTemplate attack_threat;  // applied to flows degraded below the PDR threshold
    std::map<ConcernKind, ThreatTemplate> iso_threats;
};

ThreatKb load_threat_kb(std::string_view bytes);
ThreatKb load_threat_kb_file(const std::filesystem::path& path);
const ThreatKb& builtin_threat_kb();

// Rule-based control checks over the profiled assets: long-lifecycle
// firmware below the configured floor, flows crossing link classes, vendor
// mixes between flow endpoints, and constrained sensor devices.
std::vector<Concern> iso27030_checks(const std::vector<discovery::AssetProfile>& profiles,
                                     const net::NetworkState& net,
                                     const AssessmentConfig& cfg);

// One scenario per matching (finding x threat-kb entry), one per flow whose
// PDR fell below the threshold, one per concern; deduplicated by
// (asset, threat name). Ids are assigned in emission order.
std::vector<ThreatScenario> enumerate_threats(const std::vector<vuln::VulnerabilityFinding>& findings,
                                              const std::vector<report::FlowSummary>& flows,
                                              const std::vector<Concern>& concerns,
                                              const ThreatKb& kb, const AssessmentConfig& cfg,
                                              const net::NetworkState& net);

struct RiskEntry {
    std::string scenario_id;
    std::string asset;
    std::string threat_name;
    Level probability = Level::Low;
    std::map<std::string, Level> impact_values;  // one per area
    std::uint64_t relative_impact = 0;           // sum of rank * value
    std::uint64_t risk_score = 0;                // probability * relative impact
    std::string mitigation;                      // mitigate | defer | accept | transfer
};

// Qualitative probability tier: simulation evidence above the DR bar or an
// available exploit is high; a vulnerability without exploit (or simulated
// degradation below the bar) is med; control concerns alone are low.
Level derive_probability(const ThreatScenario& scenario, const AssessmentConfig& cfg);

// relative_impact = sum(rank * value), risk_score = probability * relative.
// Throws MissingAreaError when an area has no impact value.
RiskEntry score_risk(const ThreatScenario& scenario, Level probability,
                     const std::map<std::string, Level>& impact_values,
                     const RiskCriteria& criteria);

// Band thresholds are fractions of the criteria's maximum score. Scenarios
// whose consequence is financial-only transfer instead.
std::string select_mitigation(const RiskEntry& entry, const RiskCriteria& criteria,
                              const AssessmentConfig& cfg, bool financial_only);

// Full path: probability, impacts (KB defaults, unnamed areas low), scoring
// and mitigation, ranked by score desc, asset asc, scenario id asc.
std::vector<RiskEntry> build_risk_register(const std::vector<ThreatScenario>& threats,
                                           const RiskCriteria& criteria,
                                           const AssessmentConfig& cfg);

}  // namespace aras::risk
