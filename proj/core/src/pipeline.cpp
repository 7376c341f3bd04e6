#include "aras/pipeline.hpp"

#include <map>
#include <utility>

#include "aras/attack/attack.hpp"
#include "aras/errors.hpp"
#include "aras/net/simulation.hpp"

namespace aras {

namespace {

// Later phases need the artifacts of earlier ones, so switching one on
// switches its prerequisites on too.
PhaseSet close_over_prerequisites(PhaseSet set) {
    if (set.report) set.assess = true;
    if (set.assess) set.scan = true;
    if (set.scan) set.discover = true;
    return set;
}

std::filesystem::path resolve_kb_path(const std::filesystem::path& base_dir,
                                      const std::string& name) {
    std::filesystem::path p(name);
    if (p.is_absolute()) return p;
    return base_dir / p;
}

std::vector<report::AnomalyFlag> detect_all(const std::vector<report::MetricSample>& samples,
                                            const AnomalyConfig& cfg) {
    // Samples arrive interleaved across nodes; detection runs per series.
    std::map<std::pair<std::string, report::MetricSeries>, std::vector<report::MetricSample>>
        groups;
    for (const report::MetricSample& s : samples) groups[{s.node, s.series}].push_back(s);
    std::vector<report::AnomalyFlag> flags;
    for (const auto& [key, series] : groups) {
        auto found = report::detect_anomalies(series, cfg.window, cfg.k, cfg.absolute);
        flags.insert(flags.end(), found.begin(), found.end());
    }
    return flags;
}

}  // namespace

PhaseSet parse_phases(const std::string& text) {
    if (text.empty()) throw ParseError("empty phase list");
    PhaseSet set = PhaseSet::none();
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (token == "discover")
            set.discover = true;
        else if (token == "scan")
            set.scan = true;
        else if (token == "assess")
            set.assess = true;
        else if (token == "report")
            set.report = true;
        else
            throw ParseError("unknown phase \"" + token + "\"");
        any = true;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!any) throw ParseError("empty phase list");
    return close_over_prerequisites(set);
}

RunArtifacts run_pipeline(const net::Scenario& scenario, const RunOptions& opts) {
    RunArtifacts art;
    art.scenario = scenario;
    if (opts.seed_override) art.scenario.master_seed = *opts.seed_override;
    art.phases = close_over_prerequisites(opts.phases);
    const AssessmentConfig& cfg = art.scenario.assessment;

    art.criteria = cfg.impact_areas.empty() ? risk::define_criteria(default_impact_areas())
                                            : risk::define_criteria(cfg.impact_areas);

    art.net = std::make_unique<net::NetworkState>(art.scenario);
    attack::apply_attacks(*art.net, art.scenario.attacks);

    net::Simulation sim(*art.net);
    if (art.phases.assess) sim.setup_attacks();
    if (art.phases.discover) sim.schedule_sweep();
    if (art.phases.assess) {
        for (std::size_t i = 0; i < art.scenario.flows.size(); ++i) {
            try {
                sim.emit_traffic(i);
            } catch (const UnreachableError&) {
                // Flow stays at zero counters; network_health reports it.
            }
        }
    }

    sim::SimTime until = opts.until_us ? sim::SimTime{*opts.until_us} : sim::SimTime::max();
    art.kernel_stats = sim.run(until);
    art.events = sim.events();
    art.samples = sim.metric_samples();
    art.flows = report::summarize_flows(*art.net);

    if (art.phases.discover) art.inventory = sim.discovered();

    if (art.phases.scan && !art.inventory.empty()) {
        art.profiles = discovery::profile_assets(art.inventory, cfg, *art.net);
        art.containers = discovery::map_containers(art.profiles, *art.net);
        vuln::VulnKb kb = cfg.vuln_kb
                              ? vuln::load_vuln_kb_file(resolve_kb_path(opts.base_dir, *cfg.vuln_kb))
                              : vuln::builtin_vuln_kb();
        art.findings = vuln::scan(art.profiles, *art.net, kb, cfg.classify);
    }

    if (art.phases.assess) {
        art.concerns = risk::iso27030_checks(art.profiles, *art.net, cfg);
        risk::ThreatKb tkb =
            cfg.threat_kb ? risk::load_threat_kb_file(resolve_kb_path(opts.base_dir, *cfg.threat_kb))
                          : risk::builtin_threat_kb();
        art.threats =
            risk::enumerate_threats(art.findings, art.flows, art.concerns, tkb, cfg, *art.net);
        art.risk_register = risk::build_risk_register(art.threats, art.criteria, cfg);
        art.anomalies = detect_all(art.samples, cfg.anomaly);
        art.health = report::network_health(*art.net);
    }

    return art;
}

}  // namespace aras
