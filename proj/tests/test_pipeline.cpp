#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aras/errors.hpp"
#include "aras/net/scenario.hpp"
#include "aras/pipeline.hpp"
#include "aras/report/report.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace aras;
using testutil::flow;
using testutil::link;
using testutil::node;

#ifndef ARAS_SCENARIO_DIR
#define ARAS_SCENARIO_DIR "scenarios"
#endif

namespace {

net::Scenario load_demo(const std::string& name) {
    return net::load_scenario_file(std::string(ARAS_SCENARIO_DIR) + "/" + name);
}

RunOptions demo_options() {
    RunOptions opts;
    opts.deterministic = true;
    opts.base_dir = ARAS_SCENARIO_DIR;
    return opts;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE("phases") {

TEST_CASE("phase lists parse and close over prerequisites") {
    PhaseSet all = parse_phases("report");
    CHECK(all.discover);
    CHECK(all.scan);
    CHECK(all.assess);
    CHECK(all.report);

    PhaseSet scan_only = parse_phases("scan");
    CHECK(scan_only.discover);
    CHECK(scan_only.scan);
    CHECK_FALSE(scan_only.assess);
    CHECK_FALSE(scan_only.report);

    PhaseSet discover_only = parse_phases("discover");
    CHECK(discover_only.discover);
    CHECK_FALSE(discover_only.scan);

    PhaseSet listed = parse_phases("discover,scan,assess,report");
    CHECK(listed.report);

    CHECK_THROWS_AS(parse_phases("discover,fnord"), ParseError);
    CHECK_THROWS_AS(parse_phases(""), ParseError);
}

TEST_CASE("switched-off phases leave their artifacts empty") {
    net::Scenario s = load_demo("baseline.json");
    RunOptions opts = demo_options();
    opts.phases = parse_phases("discover");
    RunArtifacts art = run_pipeline(s, opts);
    CHECK(art.inventory.size() == 5);
    CHECK(art.profiles.empty());
    CHECK(art.findings.empty());
    CHECK(art.threats.empty());
    CHECK(art.risk_register.empty());
    CHECK(art.anomalies.empty());
    CHECK(art.health.links.empty());
    // No flow traffic was scheduled.
    for (const report::FlowSummary& f : art.flows) CHECK(f.pt == 0);

    opts.phases = parse_phases("scan");
    art = run_pipeline(s, opts);
    CHECK_FALSE(art.profiles.empty());
    CHECK_FALSE(art.findings.empty());
    CHECK(art.threats.empty());
    CHECK(art.risk_register.empty());
}

}  // TEST_SUITE phases

TEST_SUITE("pipeline") {

TEST_CASE("baseline demo: clean delivery and a populated register") {
    RunArtifacts art = run_pipeline(load_demo("baseline.json"), demo_options());

    CHECK(art.inventory.size() == 5);  // the silent host stays invisible
    for (const discovery::AssetRecord& r : art.inventory) CHECK(r.id != "hidden");

    REQUIRE(art.flows.size() == 3);
    for (const report::FlowSummary& f : art.flows) {
        REQUIRE(f.pdr.has_value());
        CHECK(*f.pdr == doctest::Approx(1.0));
    }
    CHECK_FALSE(art.findings.empty());
    CHECK_FALSE(art.risk_register.empty());

    // No degraded flows, so nothing is simulation-sourced.
    for (const risk::ThreatScenario& t : art.threats)
        CHECK(t.source != risk::ThreatSource::Simulation);

    // The bundled scenario exercises every mitigation band.
    std::set<std::string> mitigations;
    for (const risk::RiskEntry& e : art.risk_register) mitigations.insert(e.mitigation);
    CHECK(mitigations ==
          std::set<std::string>{"accept", "defer", "mitigate", "transfer"});

    // gw carries every inter-segment path.
    CHECK(art.health.articulation_points ==
          std::vector<std::string>{"gw", "scada"});
    CHECK(art.health.unreachable_flows.empty());
    CHECK(art.anomalies.empty());
}

TEST_CASE("ip-dropping demo: the gateway blackholes both crossing flows") {
    RunArtifacts art = run_pipeline(load_demo("ip-dropping.json"), demo_options());
    REQUIRE(art.flows.size() == 3);
    for (const report::FlowSummary& f : art.flows) {
        REQUIRE(f.pdr.has_value());
        if (f.src == "scada")
            CHECK(*f.pdr == doctest::Approx(1.0));  // stays off the gateway
        else
            CHECK(*f.pdr == doctest::Approx(0.0));
    }
    REQUIRE_FALSE(art.risk_register.empty());
    const risk::RiskEntry& top = art.risk_register.front();
    CHECK(top.threat_name == "availability degradation");
    CHECK(top.mitigation == "mitigate");

    bool found = false;
    for (const risk::ThreatScenario& t : art.threats)
        if (t.id == top.scenario_id) {
            found = true;
            CHECK(t.source == risk::ThreatSource::Simulation);
            REQUIRE(t.evidence.has_value());
            CHECK(t.evidence->dr > 0.5);
        }
    CHECK(found);
}

TEST_CASE("sinkhole demo: attraction, losses and mid-run anomalies") {
    RunArtifacts art = run_pipeline(load_demo("sinkhole.json"), demo_options());
    REQUIRE(art.flows.size() == 3);
    for (const report::FlowSummary& f : art.flows) {
        REQUIRE(f.pdr.has_value());
        if (f.src == "h2")
            CHECK(*f.pdr == doctest::Approx(1.0));
        else
            CHECK(*f.pdr < 0.5);
    }
    CHECK_FALSE(art.anomalies.empty());
    // Pre-attack traffic is steady, so every flag postdates the attack start.
    for (const report::AnomalyFlag& a : art.anomalies) CHECK(a.t_us > 600000);
}

TEST_CASE("identical seeds give byte-identical outputs") {
    std::filesystem::path base = std::filesystem::temp_directory_path() / "aras-det";
    std::filesystem::remove_all(base);
    for (const char* name : {"baseline.json", "ip-dropping.json", "sinkhole.json"}) {
        RunArtifacts a = run_pipeline(load_demo(name), demo_options());
        RunArtifacts b = run_pipeline(load_demo(name), demo_options());
        report::ReportFiles fa = report::emit_run_report(a, base / "a", true);
        report::ReportFiles fb = report::emit_run_report(b, base / "b", true);
        CHECK(slurp(fa.events_jsonl) == slurp(fb.events_jsonl));
        CHECK(slurp(fa.metrics_csv) == slurp(fb.metrics_csv));
        CHECK(slurp(fa.report_json) == slurp(fb.report_json));
    }
    std::filesystem::remove_all(base);
}

TEST_CASE("the seed override changes the loss pattern") {
    net::Scenario s = testutil::line_scenario(2000, 0.1, 1);
    s.assessment.probe_origin = "h1";
    s.assessment.sweep_ranges = {Cidr::parse("10.9.0.0/24")};
    RunOptions opts;
    RunArtifacts a = run_pipeline(s, opts);
    opts.seed_override = 999;
    RunArtifacts b = run_pipeline(s, opts);
    CHECK(b.scenario.master_seed == 999);
    CHECK(report::events_to_jsonl(a) != report::events_to_jsonl(b));
}

TEST_CASE("the horizon cuts the run short") {
    net::Scenario s = load_demo("baseline.json");
    RunOptions opts = demo_options();
    opts.until_us = 100000;
    RunArtifacts art = run_pipeline(s, opts);
    CHECK(art.kernel_stats.clock.us <= 100000);
    for (const report::FlowSummary& f : art.flows) CHECK(f.pt < 1000);
}

TEST_CASE("unreachable flows are skipped and reported, not fatal") {
    net::Scenario s;
    s.name = "partitioned";
    s.nodes = {node("a", "10.0.0.1"), node("b", "10.0.0.2"), node("c", "10.0.0.3"),
               node("d", "10.0.0.4")};
    s.links = {testutil::link("a", "b"), testutil::link("c", "d")};
    s.flows = {flow("a", "b", 50), flow("a", "c", 50)};
    s.assessment.probe_origin = "a";
    s.assessment.sweep_ranges = {Cidr::parse("10.0.0.0/24")};
    RunArtifacts art = run_pipeline(s, RunOptions{});
    REQUIRE(art.flows.size() == 2);
    CHECK(art.flows[0].pt == 50);
    CHECK(art.flows[1].pt == 0);
    REQUIRE(art.health.unreachable_flows.size() == 1);
    CHECK(art.health.unreachable_flows[0] == std::make_pair(std::string("a"),
                                                            std::string("c")));
}

TEST_CASE("report emission fails loudly on an unwritable destination") {
    RunArtifacts art = run_pipeline(load_demo("baseline.json"), demo_options());
    CHECK_THROWS_AS(report::emit_run_report(art, "/dev/null/impossible", true), IoError);
}

}  // TEST_SUITE pipeline
