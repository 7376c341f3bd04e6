#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aras/discovery/discovery.hpp"
#include "aras/net/network.hpp"
#include "aras/net/scenario.hpp"
#include "aras/report/anomaly.hpp"
#include "aras/report/health.hpp"
#include "aras/report/metrics.hpp"
#include "aras/risk/risk.hpp"
#include "aras/sim/kernel.hpp"
#include "aras/vuln/vuln.hpp"

namespace aras {

// Pipeline stages. Later stages imply the earlier ones they feed on, so
// requesting only "assess" still discovers and scans.
enum class Phase { Discover, Scan, Assess, Report };

struct PhaseSet {
    bool discover = true;
    bool scan = true;
    bool assess = true;
    bool report = true;

    static PhaseSet all() { return {}; }
    static PhaseSet none() { return {false, false, false, false}; }
};

// Parses a comma separated phase list ("discover,scan"). Unknown names
// throw ParseError. The result is closed under prerequisites.
PhaseSet parse_phases(const std::string& text);

struct RunOptions {
    std::optional<std::uint64_t> seed_override;
    bool deterministic = false;
    PhaseSet phases = PhaseSet::all();
    std::optional<std::uint64_t> until_us;
    // Base directory for resolving knowledge base paths named by the
    // scenario. Defaults to the scenario file's directory.
    std::filesystem::path base_dir = ".";
};

struct RunArtifacts {
    net::Scenario scenario;
    PhaseSet phases;
    std::unique_ptr<net::NetworkState> net;
    sim::KernelStats kernel_stats{};
    std::vector<sim::Event> events;
    std::vector<report::MetricSample> samples;
    std::vector<discovery::AssetRecord> inventory;
    std::vector<discovery::AssetProfile> profiles;
    std::vector<discovery::Container> containers;
    std::vector<vuln::VulnerabilityFinding> findings;
    std::vector<risk::Concern> concerns;
    std::vector<risk::ThreatScenario> threats;
    std::vector<report::FlowSummary> flows;
    std::vector<report::AnomalyFlag> anomalies;
    report::HealthReport health;
    risk::RiskCriteria criteria;
    std::vector<risk::RiskEntry> risk_register;
};

// Runs the assessment pipeline over one scenario: build the network, sweep
// for assets, profile and scan them, drive the traffic and attack
// simulation, enumerate threats and score risks, and collect every
// artifact a report needs. Phases that are switched off leave their
// artifacts empty.
RunArtifacts run_pipeline(const net::Scenario& scenario, const RunOptions& opts);

}  // namespace aras
