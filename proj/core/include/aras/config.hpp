#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aras/addr.hpp"
#include "aras/level.hpp"
#include "aras/net/types.hpp"
#include "aras/version.hpp"

namespace aras {

// OCTAVE-style profile fields a class of assets gets by default.
struct ProfileDefaults {
    std::string owner;
    Level value = Level::Low;
    std::set<SecurityRequirement> requirements;
    SecurityRequirement most_important = SecurityRequirement::Availability;
};

// Per-node override; unset fields fall through to the class default.
struct ProfileOverride {
    std::optional<std::string> owner;
    std::optional<Level> value;
    std::optional<std::set<SecurityRequirement>> requirements;
    std::optional<SecurityRequirement> most_important;
};

struct ImpactArea {
    std::string name;
    std::uint32_t rank = 1;
};

// Severity cut-points and the sensitivity bonus added to the base score.
struct ClassifyPolicy {
    double high_threshold = 7.0;
    double med_threshold = 4.0;
    double bonus_low = 0.0;
    double bonus_med = 1.0;
    double bonus_high = 2.0;

    double bonus(Level sensitivity) const {
        switch (sensitivity) {
            case Level::Low: return bonus_low;
            case Level::Med: return bonus_med;
            default: return bonus_high;
        }
    }
};

struct AnomalyConfig {
    std::uint32_t window = 20;
    double k = 3.0;
    std::optional<double> absolute;
};

// The scenario's "assessment" object: tuning criteria for discovery,
// classification, risk scoring and reporting.
struct AssessmentConfig {
    std::optional<std::string> probe_origin;
    std::vector<Cidr> sweep_ranges;
    // When absent, built-in per-class defaults apply. When present the map
    // must cover every discovered class.
    std::optional<std::map<net::NodeClass, ProfileDefaults>> class_defaults;
    std::map<std::string, ProfileOverride> overrides;

    std::vector<ImpactArea> impact_areas;  // empty -> default ICS criteria
    double dr_high = 0.5;                  // probability rule: DR above this is "high"
    double band_mitigate = 0.6;            // fraction of the maximum risk score
    double band_defer = 0.35;
    double pdr_threshold = 0.9;            // flows below this PDR become threat scenarios
    std::map<std::string, Version> version_floors;

    ClassifyPolicy classify;
    AnomalyConfig anomaly;

    std::uint64_t metrics_interval_us = 100000;
    std::uint64_t probe_interval_us = 1000;

    std::optional<std::string> vuln_kb;    // path relative to the scenario file
    std::optional<std::string> threat_kb;

    std::map<net::NodeClass, double> energy_mj_per_packet;  // overrides per class
};

// Default ICS impact areas, most critical first.
std::vector<ImpactArea> default_impact_areas();

// Built-in profile defaults covering every node class.
const std::map<net::NodeClass, ProfileDefaults>& builtin_class_defaults();

// Per-packet energy charge for a node class, honoring overrides.
double energy_mj_for(const AssessmentConfig& cfg, net::NodeClass cls);

}  // namespace aras
