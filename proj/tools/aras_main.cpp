// Command line front end: validate scenarios, run the assessment
// pipeline, compare two emitted reports.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aras/errors.hpp"
#include "aras/net/scenario.hpp"
#include "aras/pipeline.hpp"
#include "aras/report/compare.hpp"
#include "aras/report/report.hpp"
#include "json.hpp"

namespace {

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string phases_text(const aras::PhaseSet& phases) {
    std::string out;
    auto add = [&](const char* name) {
        if (!out.empty()) out += ',';
        out += name;
    };
    if (phases.discover) add("discover");
    if (phases.scan) add("scan");
    if (phases.assess) add("assess");
    if (phases.report) add("report");
    return out;
}

int cmd_validate(const std::string& scenario_path) {
    aras::net::Scenario scenario = aras::net::load_scenario_file(scenario_path);
    std::printf("%s: ok (%zu nodes, %zu links, %zu flows, %zu attacks)\n",
                scenario.name.c_str(), scenario.nodes.size(), scenario.links.size(),
                scenario.flows.size(), scenario.attacks.size());
    return 0;
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            const aras::RunOptions& opts) {
    aras::net::Scenario scenario = aras::net::load_scenario_file(scenario_path);
    aras::RunOptions effective = opts;
    effective.base_dir = std::filesystem::path(scenario_path).parent_path();
    if (effective.base_dir.empty()) effective.base_dir = ".";

    aras::RunArtifacts art = aras::run_pipeline(scenario, effective);
    aras::report::ReportFiles files =
        aras::report::emit_run_report(art, out_dir, effective.deterministic);

    std::printf("scenario: %s (seed %llu)\n", art.scenario.name.c_str(),
                static_cast<unsigned long long>(art.scenario.master_seed));
    std::printf("phases: %s\n", phases_text(art.phases).c_str());
    std::printf("events executed: %llu, clock %llu us\n",
                static_cast<unsigned long long>(art.kernel_stats.events_executed),
                static_cast<unsigned long long>(art.kernel_stats.clock.us));
    std::printf("assets discovered: %zu\n", art.inventory.size());
    std::printf("findings: %zu, concerns: %zu, threats: %zu\n", art.findings.size(),
                art.concerns.size(), art.threats.size());
    for (const aras::report::FlowSummary& f : art.flows) {
        std::string pdr = f.pdr ? fmt3(*f.pdr) : std::string("n/a");
        std::string dr = f.dr ? fmt3(*f.dr) : std::string("n/a");
        std::printf("flow %s -> %s: pdr %s, dr %s\n", f.src.c_str(), f.dst.c_str(), pdr.c_str(),
                    dr.c_str());
    }
    std::size_t shown = 0;
    for (const aras::risk::RiskEntry& e : art.risk_register) {
        if (shown++ == 5) break;
        std::printf("risk %s %s \"%s\": score %llu/%llu -> %s\n", e.scenario_id.c_str(),
                    e.asset.c_str(), e.threat_name.c_str(),
                    static_cast<unsigned long long>(e.risk_score),
                    static_cast<unsigned long long>(art.criteria.score_max()),
                    e.mitigation.c_str());
    }
    if (art.risk_register.size() > shown)
        std::printf("  ... %zu more risk entries\n", art.risk_register.size() - shown);
    std::printf("anomalies flagged: %zu\n", art.anomalies.size());
    std::printf("wrote %s, %s, %s\n", files.report_json.c_str(), files.events_jsonl.c_str(),
                files.metrics_csv.c_str());
    return 0;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw aras::IoError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw aras::ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

int cmd_compare(const std::string& base_path, const std::string& other_path) {
    nlohmann::json base = load_json_file(base_path);
    nlohmann::json other = load_json_file(other_path);
    aras::report::CompareResult result = aras::report::compare_reports(base, other);
    std::fputs(aras::report::format_compare(result).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network risk assessment toolkit"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> until_us;
    std::string phases_arg;
    bool deterministic = false;

    CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--scenario", scenario_path, "scenario JSON file")->required();

    CLI::App* run = app.add_subcommand("run", "run the assessment pipeline");
    run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_dir, "output directory (default $ARAS_OUT or ./out)");
    run->add_option("--seed", seed, "override the scenario master seed");
    run->add_flag("--deterministic", deterministic, "omit timestamps from the report");
    run->add_option("--phases", phases_arg, "comma separated phases to run");
    run->add_option("--until-us", until_us, "stop the simulation at this time");

    std::string base_path, other_path;
    CLI::App* compare = app.add_subcommand("compare", "diff two report.json files");
    compare->add_option("base", base_path, "baseline report.json")->required();
    compare->add_option("other", other_path, "comparison report.json")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(scenario_path);
        if (run->parsed()) {
            if (out_dir.empty()) {
                const char* env = std::getenv("ARAS_OUT");
                out_dir = env && *env ? env : "out";
            }
            aras::RunOptions opts;
            opts.seed_override = seed;
            opts.deterministic = deterministic;
            opts.until_us = until_us;
            if (!phases_arg.empty()) opts.phases = aras::parse_phases(phases_arg);
            return cmd_run(scenario_path, out_dir, opts);
        }
        if (compare->parsed()) return cmd_compare(base_path, other_path);
    } catch (const aras::Error& e) {
        std::fprintf(stderr, "error (%s): %s\n", std::string(e.kind()).c_str(), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
