#include "aras/report/report.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>

#include "aras/errors.hpp"

namespace aras::report {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

json phases_json(const PhaseSet& phases) {
    json out = json::array();
    if (phases.discover) out.push_back("discover");
    if (phases.scan) out.push_back("scan");
    if (phases.assess) out.push_back("assess");
    if (phases.report) out.push_back("report");
    return out;
}

json inventory_json(const RunArtifacts& art) {
    json out = json::array();
    for (const discovery::AssetRecord& rec : art.inventory)
        out.push_back({{"addr", rec.addr.str()},
                       {"class", std::string(net::to_string(rec.node_class))},
                       {"id", rec.id},
                       {"mac", rec.mac.str()},
                       {"medium", std::string(net::to_string(rec.medium))},
                       {"os", rec.os}});
    return out;
}

json profiles_json(const RunArtifacts& art) {
    json out = json::array();
    for (const discovery::AssetProfile& p : art.profiles) {
        json reqs = json::array();
        for (SecurityRequirement r : p.requirements) reqs.push_back(std::string(to_string(r)));
        out.push_back({{"asset", p.asset.id},
                       {"most_important", std::string(to_string(p.most_important))},
                       {"owner", p.owner},
                       {"priority", p.priority},
                       {"requirements", reqs},
                       {"value", std::string(to_string(p.value))}});
    }
    return out;
}

json containers_json(const RunArtifacts& art) {
    json out = json::array();
    for (const discovery::Container& c : art.containers)
        out.push_back({{"asset", c.asset},
                       {"location", c.location},
                       {"mode", std::string(discovery::to_string(c.mode))}});
    return out;
}

json findings_json(const RunArtifacts& art) {
    json out = json::array();
    for (const vuln::VulnerabilityFinding& f : art.findings)
        out.push_back({{"asset", f.asset},
                       {"base_score", f.base_score},
                       {"description", f.description},
                       {"effective_score", f.effective_score},
                       {"exploit_available", f.exploit_available},
                       {"product", f.product},
                       {"severity", std::string(to_string(f.severity))},
                       {"version", f.version.str()},
                       {"vuln", f.vuln}});
    return out;
}

json concerns_json(const RunArtifacts& art) {
    json out = json::array();
    for (const risk::Concern& c : art.concerns)
        out.push_back({{"asset", c.asset},
                       {"detail", c.detail},
                       {"kind", std::string(risk::to_string(c.kind))}});
    return out;
}

json threats_json(const RunArtifacts& art) {
    json out = json::array();
    for (const risk::ThreatScenario& t : art.threats) {
        json impacts = json::object();
        for (const auto& [area, level] : t.impacts) impacts[area] = std::string(to_string(level));
        json entry{{"asset", t.asset},
                   {"consequence", t.consequence},
                   {"exploit_available", t.exploit_available},
                   {"financial_only", t.financial_only},
                   {"id", t.id},
                   {"impacts", impacts},
                   {"name", t.threat_name},
                   {"source", std::string(risk::to_string(t.source))}};
        if (t.evidence)
            entry["evidence"] = {{"dr", t.evidence->dr},
                                 {"flow", t.evidence->flow},
                                 {"pdr", t.evidence->pdr}};
        out.push_back(std::move(entry));
    }
    return out;
}

json risk_register_json(const RunArtifacts& art) {
    json out = json::array();
    for (const risk::RiskEntry& e : art.risk_register) {
        json impacts = json::object();
        for (const auto& [area, level] : e.impact_values)
            impacts[area] = std::string(to_string(level));
        out.push_back({{"asset", e.asset},
                       {"impact_values", impacts},
                       {"mitigation", e.mitigation},
                       {"probability", std::string(to_string(e.probability))},
                       {"relative_impact", e.relative_impact},
                       {"risk_score", e.risk_score},
                       {"scenario_id", e.scenario_id},
                       {"threat_name", e.threat_name}});
    }
    return out;
}

json metrics_json(const RunArtifacts& art) {
    json flows = json::array();
    for (const FlowSummary& f : art.flows) {
        json entry{{"dst", f.dst},
                   {"in_flight", f.in_flight},
                   {"pd", f.pd},
                   {"pl", f.pl},
                   {"pt", f.pt},
                   {"src", f.src}};
        entry["pdr"] = f.pdr ? json(*f.pdr) : json(nullptr);
        entry["dr"] = f.dr ? json(*f.dr) : json(nullptr);
        flows.push_back(std::move(entry));
    }
    json nodes = json::array();
    if (art.net)
        for (std::size_t i = 0; i < art.net->node_count(); ++i) {
            const net::NodeRuntime& rt = art.net->node_runtime(i);
            nodes.push_back({{"dropped", rt.dropped},
                             {"energy_mj", rt.energy_mj()},
                             {"id", art.net->node(i).id},
                             {"received", rt.received},
                             {"sent", rt.sent}});
        }
    return {{"flows", flows},
            {"kernel",
             {{"clock_us", art.kernel_stats.clock.us},
              {"events_executed", art.kernel_stats.events_executed}}},
            {"nodes", nodes}};
}

json anomalies_json(const RunArtifacts& art) {
    json out = json::array();
    for (const AnomalyFlag& a : art.anomalies)
        out.push_back({{"bound",
                        {{"absolute", a.bound.absolute},
                         {"k", a.bound.k},
                         {"mean", a.bound.mean},
                         {"std_dev", a.bound.std_dev},
                         {"threshold", a.bound.threshold}}},
                       {"node", a.node},
                       {"series", a.series},
                       {"t_us", a.t_us},
                       {"value", a.value}});
    return out;
}

json health_json(const RunArtifacts& art) {
    json links = json::array();
    for (const LinkLoad& l : art.health.links)
        links.push_back(
            {{"a", l.a}, {"b", l.b}, {"class", l.link_class}, {"packets", l.packets}});
    json busiest = json::array();
    for (const LinkLoad& l : art.health.max_utilization)
        busiest.push_back(
            {{"a", l.a}, {"b", l.b}, {"class", l.link_class}, {"packets", l.packets}});
    json unreachable = json::array();
    for (const auto& [src, dst] : art.health.unreachable_flows)
        unreachable.push_back({{"dst", dst}, {"src", src}});
    return {{"articulation_points", art.health.articulation_points},
            {"links", links},
            {"max_utilization", busiest},
            {"unreachable_flows", unreachable}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("cannot write " + path.string());
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json report_to_json(const RunArtifacts& art, bool with_timestamp) {
    json doc{{"anomalies", anomalies_json(art)},
             {"concerns", concerns_json(art)},
             {"containers", containers_json(art)},
             {"findings", findings_json(art)},
             {"health", health_json(art)},
             {"inventory", inventory_json(art)},
             {"metrics", metrics_json(art)},
             {"profiles", profiles_json(art)},
             {"risk_register", risk_register_json(art)},
             {"scenario",
              {{"attack_count", art.scenario.attacks.size()},
               {"flow_count", art.scenario.flows.size()},
               {"master_seed", art.scenario.master_seed},
               {"name", art.scenario.name},
               {"node_count", art.scenario.nodes.size()},
               {"phases", phases_json(art.phases)}}},
             {"threats", threats_json(art)}};
    if (with_timestamp) doc["generated_at"] = utc_timestamp();
    return doc;
}

std::string events_to_jsonl(const RunArtifacts& art) {
    std::string out;
    for (const sim::Event& e : art.events) {
        json line{{"data", e.data},
                  {"kind", std::string(sim::to_string(e.kind))},
                  {"node", e.target},
                  {"t", e.time.us}};
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string metrics_to_csv(const RunArtifacts& art) {
    std::string out = "t,node,series,value\n";
    for (const MetricSample& s : art.samples) {
        out += std::to_string(s.t_us);
        out += ',';
        out += s.node;
        out += ',';
        out += to_string(s.series);
        out += ',';
        out += fmt_double(s.value);
        out += '\n';
    }
    return out;
}

ReportFiles emit_run_report(const RunArtifacts& art, const std::filesystem::path& out_dir,
                            bool deterministic) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string());
    ReportFiles files{out_dir / "events.jsonl", out_dir / "metrics.csv",
                      out_dir / "report.json"};
    write_file(files.events_jsonl, events_to_jsonl(art));
    write_file(files.metrics_csv, metrics_to_csv(art));
    json doc = report_to_json(art, !deterministic);
    write_file(files.report_json, doc.dump(2) + "\n");
    return files;
}

void check_report_schema(const json& doc) {
    if (!doc.is_object()) throw SchemaMismatchError("report root is not an object");
    static const std::vector<std::pair<const char*, json::value_t>> sections = {
        {"anomalies", json::value_t::array},   {"concerns", json::value_t::array},
        {"containers", json::value_t::array},  {"findings", json::value_t::array},
        {"health", json::value_t::object},     {"inventory", json::value_t::array},
        {"metrics", json::value_t::object},    {"profiles", json::value_t::array},
        {"risk_register", json::value_t::array}, {"scenario", json::value_t::object},
        {"threats", json::value_t::array},
    };
    for (const auto& [key, type] : sections) {
        if (!doc.contains(key)) throw SchemaMismatchError("missing section \"" + std::string(key) + "\"");
        if (doc[key].type() != type)
            throw SchemaMismatchError("section \"" + std::string(key) + "\" has the wrong type");
    }
    for (const auto& item : doc.items())
        if (item.key() != "generated_at" &&
            std::none_of(sections.begin(), sections.end(),
                         [&](const auto& s) { return item.key() == s.first; }))
            throw SchemaMismatchError("unknown section \"" + item.key() + "\"");
    for (const char* key : {"flows", "kernel", "nodes"})
        if (!doc["metrics"].contains(key))
            throw SchemaMismatchError("metrics section missing \"" + std::string(key) + "\"");
    for (const char* key : {"articulation_points", "links", "max_utilization", "unreachable_flows"})
        if (!doc["health"].contains(key))
            throw SchemaMismatchError("health section missing \"" + std::string(key) + "\"");
}

}  // namespace aras::report
