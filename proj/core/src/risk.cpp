#include "aras/risk/risk.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "aras/errors.hpp"
#include "jsonio.hpp"

namespace aras::risk {

namespace {

using io::ObjectReader;
using nlohmann::json;

std::string_view vendor_of(std::string_view product) {
    return product.substr(0, product.find('-'));
}

std::map<std::string, Level> parse_impacts(const json& j, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path, "expected an object");
    std::map<std::string, Level> impacts;
    for (const auto& item : j.items()) {
        std::string text = ObjectReader::as_string(item.value(), path + "." + item.key());
        try {
            impacts.emplace(item.key(), level_from_string(text));
        } catch (const ParseError& e) {
            throw ValidationError(path + "." + item.key(), e.what());
        }
    }
    return impacts;
}

ThreatTemplate parse_template(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    ThreatTemplate t;
    t.name = r.get_string("name");
    t.consequence = r.get_string("consequence");
    t.impacts = parse_impacts(r.require("impacts"), path + ".impacts");
    t.financial_only = r.get_bool_or("financial_only", false);
    r.finish();
    return t;
}

FindingThreat parse_finding_threat(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    FindingThreat t;
    t.id = r.get_string("id");
    t.name = r.get_string("name");
    t.consequence = r.get_string("consequence");
    t.requires_exploit = r.get_bool_or("requires_exploit", false);
    if (const json* classes = r.get_array_opt("applies_classes")) {
        for (std::size_t i = 0; i < classes->size(); ++i) {
            std::string at = path + ".applies_classes[" + std::to_string(i) + "]";
            std::string text = ObjectReader::as_string((*classes)[i], at);
            try {
                t.applies_classes.push_back(net::node_class_from_string(text));
            } catch (const ParseError& e) {
                throw ValidationError(at, e.what());
            }
        }
    }
    if (const json* min = r.optional("min_severity")) {
        std::string text = ObjectReader::as_string(*min, path + ".min_severity");
        try {
            t.min_severity = level_from_string(text);
        } catch (const ParseError& e) {
            throw ValidationError(path + ".min_severity", e.what());
        }
    }
    t.impacts = parse_impacts(r.require("impacts"), path + ".impacts");
    t.financial_only = r.get_bool_or("financial_only", false);
    r.finish();
    return t;
}

ConcernKind concern_kind_from_string(std::string_view s) {
    if (s == "long-lifecycle") return ConcernKind::LongLifecycle;
    if (s == "heterogeneity") return ConcernKind::Heterogeneity;
    if (s == "vendor-mix") return ConcernKind::VendorMix;
    if (s == "constrained-device") return ConcernKind::ConstrainedDevice;
    throw ParseError("unknown concern kind \"" + std::string(s) + "\"");
}

std::string scenario_id(std::size_t ordinal) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "TS-%04zu", ordinal);
    return buf;
}

}  // namespace

std::string_view to_string(ThreatSource s) {
    switch (s) {
        case ThreatSource::Kb: return "kb";
        case ThreatSource::Simulation: return "simulation";
        default: return "iso-check";
    }
}

std::string_view to_string(ConcernKind k) {
    switch (k) {
        case ConcernKind::LongLifecycle: return "long-lifecycle";
        case ConcernKind::Heterogeneity: return "heterogeneity";
        case ConcernKind::VendorMix: return "vendor-mix";
        default: return "constrained-device";
    }
}

std::uint64_t RiskCriteria::rank_sum() const {
    std::uint64_t sum = 0;
    for (const ImpactArea& a : areas) sum += a.rank;
    return sum;
}

RiskCriteria define_criteria(const std::vector<ImpactArea>& areas) {
    std::set<std::string> names;
    std::set<std::uint32_t> ranks;
    for (const ImpactArea& a : areas) {
        if (!names.insert(a.name).second)
            throw DuplicateAreaError("duplicate impact area \"" + a.name + "\"");
        ranks.insert(a.rank);
    }
    bool permutation = ranks.size() == areas.size() &&
                       (areas.empty() || (*ranks.begin() == 1 &&
                                          *ranks.rbegin() == areas.size()));
    if (!permutation)
        throw BadRanksError("ranks must be a permutation of 1.." + std::to_string(areas.size()));
    return RiskCriteria{areas};
}

ThreatKb load_threat_kb(std::string_view bytes) {
    json doc = io::parse_document(bytes);
    ObjectReader r(doc, "");
    ThreatKb kb;
    if (const json* threats = r.get_array_opt("finding_threats")) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < threats->size(); ++i) {
            std::string path = "finding_threats[" + std::to_string(i) + "]";
            FindingThreat t = parse_finding_threat((*threats)[i], path);
            if (!ids.insert(t.id).second)
                throw ValidationError(path + ".id", "duplicate id \"" + t.id + "\"");
            kb.finding_threats.push_back(std::move(t));
        }
    }
    kb.attack_threat = parse_template(r.require("attack_threat"), "attack_threat");
    if (const json* iso = r.get_object_opt("iso_threats")) {
        for (const auto& item : iso->items()) {
            std::string path = "iso_threats." + item.key();
            ConcernKind kind;
            try {
                kind = concern_kind_from_string(item.key());
            } catch (const ParseError& e) {
                throw ValidationError(path, e.what());
            }
            kb.iso_threats.emplace(kind, parse_template(item.value(), path));
        }
    }
    r.finish();
    return kb;
}

ThreatKb load_threat_kb_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open threat KB " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read threat KB " + path.string());
    return load_threat_kb(buffer.str());
}

const ThreatKb& builtin_threat_kb() {
    static const ThreatKb kb = [] {
        ThreatKb k;
        k.finding_threats = {
            {"T-MALWARE", "cross-platform malware infection",
             "malware pivots between the IT and OT segments through a shared service", true, {},
             Level::Med,
             {{"safety", Level::Med},
              {"availability", Level::High},
              {"productivity", Level::Med},
              {"reputation", Level::Med},
              {"financial", Level::Med}},
             false},
            {"T-LEGACY", "legacy device compromise",
             "an unauthenticated legacy interface allows direct process manipulation", false,
             {net::NodeClass::Plc, net::NodeClass::ScadaServer}, Level::Med,
             {{"safety", Level::High},
              {"availability", Level::Med},
              {"productivity", Level::Med},
              {"reputation", Level::Low},
              {"financial", Level::Low}},
             false},
            {"T-DATA-THEFT", "process data exfiltration",
             "sensitive process data leaves the historian", false,
             {net::NodeClass::ScadaServer, net::NodeClass::ItHost}, Level::Low,
             {{"safety", Level::Low},
              {"availability", Level::Low},
              {"productivity", Level::Low},
              {"reputation", Level::Med},
              {"financial", Level::Med}},
             false},
            {"T-FIN-FRAUD", "billing record tampering",
             "billing exports are altered before invoicing", false, {net::NodeClass::ItHost},
             Level::Low,
             {{"safety", Level::Low},
              {"availability", Level::Low},
              {"productivity", Level::Low},
              {"reputation", Level::Low},
              {"financial", Level::High}},
             true},
        };
        k.attack_threat = {"availability degradation",
                           "traffic toward the asset is discarded in transit and control "
                           "visibility is lost",
                           {{"safety", Level::Med},
                            {"availability", Level::High},
                            {"productivity", Level::High},
                            {"reputation", Level::Med},
                            {"financial", Level::Med}},
                           false};
        k.iso_threats = {
            {ConcernKind::LongLifecycle,
             {"unpatched long-lifecycle device",
              "the device runs firmware below the floor expected for its class",
              {{"safety", Level::Med},
               {"availability", Level::Med},
               {"productivity", Level::Low},
               {"reputation", Level::Low},
               {"financial", Level::Low}},
              false}},
            {ConcernKind::Heterogeneity,
             {"cross-medium interoperability fault",
              "asset traffic spans link classes with differing delivery guarantees",
              {{"safety", Level::Low},
               {"availability", Level::Med},
               {"productivity", Level::Med},
               {"reputation", Level::Low},
               {"financial", Level::Low}},
              false}},
            {ConcernKind::VendorMix,
             {"multi-vendor incompatibility",
              "flow endpoints run software from unrelated vendors",
              {{"safety", Level::Low},
               {"availability", Level::Med},
               {"productivity", Level::Med},
               {"reputation", Level::Low},
               {"financial", Level::Low}},
              false}},
            {ConcernKind::ConstrainedDevice,
             {"constrained device exposure",
              "the sensor lacks capacity for endpoint protection",
              {{"safety", Level::Low},
               {"availability", Level::Med},
               {"productivity", Level::Low},
               {"reputation", Level::Low},
               {"financial", Level::Low}},
              false}},
        };
        return k;
    }();
    return kb;
}

std::vector<Concern> iso27030_checks(const std::vector<discovery::AssetProfile>& profiles,
                                     const net::NetworkState& net,
                                     const AssessmentConfig& cfg) {
    std::vector<Concern> out;
    std::set<std::tuple<std::string, int, std::string>> seen;
    auto emit = [&](const std::string& asset, ConcernKind kind, std::string detail) {
        if (seen.emplace(asset, static_cast<int>(kind), detail).second)
            out.push_back({asset, kind, std::move(detail)});
    };
    std::set<std::string> profiled;
    for (const discovery::AssetProfile& p : profiles) profiled.insert(p.asset.id);

    std::vector<std::vector<std::string>> paths;
    for (const net::FlowSpec& f : net.scenario().flows) {
        std::size_t src = net.index_of(f.src);
        std::size_t dst = net.index_of(f.dst);
        paths.push_back(net.reachable(src, dst) ? route(net, f.src, f.dst)
                                                : std::vector<std::string>{});
    }

    for (const discovery::AssetProfile& p : profiles) {
        const net::NodeSpec& node = net.node(net.index_of(p.asset.id));
        if (node.node_class == net::NodeClass::Plc ||
            node.node_class == net::NodeClass::ScadaServer) {
            for (const net::SoftwareItem& sw : node.software) {
                auto floor = cfg.version_floors.find(sw.product);
                if (floor != cfg.version_floors.end() && sw.version < floor->second)
                    emit(node.id, ConcernKind::LongLifecycle,
                         sw.product + " " + sw.version.str() + " is below the floor " +
                             floor->second.str());
            }
        }
        if (node.node_class == net::NodeClass::IiotSensor)
            emit(node.id, ConcernKind::ConstrainedDevice,
                 "constrained sensor class cannot host protective agents");
        for (std::size_t fi = 0; fi < paths.size(); ++fi) {
            const net::FlowSpec& f = net.scenario().flows[fi];
            if (f.src != node.id && f.dst != node.id) continue;
            std::set<std::string> classes;
            const std::vector<std::string>& path = paths[fi];
            for (std::size_t h = 0; h + 1 < path.size(); ++h) {
                std::size_t li = *net.link_between(net.index_of(path[h]),
                                                   net.index_of(path[h + 1]));
                classes.insert(std::string(net::to_string(net.link(li).link_class)));
            }
            if (classes.size() > 1) {
                std::string joined;
                for (const std::string& c : classes) {
                    if (!joined.empty()) joined += ", ";
                    joined += c;
                }
                emit(node.id, ConcernKind::Heterogeneity,
                     "flow " + f.src + "->" + f.dst + " spans link classes " + joined);
            }
        }
    }

    for (const net::FlowSpec& f : net.scenario().flows) {
        const net::NodeSpec& src = net.node(net.index_of(f.src));
        const net::NodeSpec& dst = net.node(net.index_of(f.dst));
        std::set<std::string_view> sv, dv;
        for (const net::SoftwareItem& sw : src.software) sv.insert(vendor_of(sw.product));
        for (const net::SoftwareItem& sw : dst.software) dv.insert(vendor_of(sw.product));
        if (sv.empty() || dv.empty()) continue;
        bool overlap = std::any_of(sv.begin(), sv.end(),
                                   [&](std::string_view v) { return dv.count(v) != 0; });
        if (overlap) continue;
        const std::string& asset = profiled.count(f.src)   ? f.src
                                   : profiled.count(f.dst) ? f.dst
                                                           : f.src;
        if (!profiled.count(asset)) continue;
        emit(asset, ConcernKind::VendorMix,
             "flow " + f.src + "->" + f.dst + " joins products from unrelated vendors");
    }

    std::sort(out.begin(), out.end(), [](const Concern& a, const Concern& b) {
        return std::make_tuple(a.asset, static_cast<int>(a.kind), a.detail) <
               std::make_tuple(b.asset, static_cast<int>(b.kind), b.detail);
    });
    return out;
}

std::vector<ThreatScenario> enumerate_threats(
    const std::vector<vuln::VulnerabilityFinding>& findings,
    const std::vector<report::FlowSummary>& flows, const std::vector<Concern>& concerns,
    const ThreatKb& kb, const AssessmentConfig& cfg, const net::NetworkState& net) {
    std::vector<ThreatScenario> out;
    std::map<std::pair<std::string, std::string>, std::size_t> by_key;
    auto add = [&](ThreatScenario t) -> ThreatScenario* {
        auto key = std::make_pair(t.asset, t.threat_name);
        auto it = by_key.find(key);
        if (it != by_key.end()) return &out[it->second];
        by_key.emplace(key, out.size());
        out.push_back(std::move(t));
        return nullptr;
    };

    for (const vuln::VulnerabilityFinding& f : findings) {
        net::NodeClass cls = net.node(net.index_of(f.asset)).node_class;
        for (const FindingThreat& ft : kb.finding_threats) {
            if (ft.requires_exploit && !f.exploit_available) continue;
            if (level_value(f.severity) < level_value(ft.min_severity)) continue;
            if (!ft.applies_classes.empty() &&
                std::find(ft.applies_classes.begin(), ft.applies_classes.end(), cls) ==
                    ft.applies_classes.end())
                continue;
            ThreatScenario t;
            t.asset = f.asset;
            t.source = ThreatSource::Kb;
            t.threat_name = ft.name;
            t.consequence = ft.consequence;
            t.exploit_available = f.exploit_available;
            t.impacts = ft.impacts;
            t.financial_only = ft.financial_only;
            if (ThreatScenario* existing = add(std::move(t))) {
                // A second finding may carry the exploit the first lacked.
                if (f.exploit_available) existing->exploit_available = true;
            }
        }
    }

    for (const report::FlowSummary& fs : flows) {
        if (!fs.pdr || *fs.pdr >= cfg.pdr_threshold) continue;
        ThreatScenario t;
        t.asset = fs.dst;
        t.source = ThreatSource::Simulation;
        t.threat_name = kb.attack_threat.name;
        t.consequence = kb.attack_threat.consequence;
        t.evidence = Evidence{fs.src + "->" + fs.dst, *fs.pdr, fs.dr.value_or(0.0)};
        t.impacts = kb.attack_threat.impacts;
        t.financial_only = kb.attack_threat.financial_only;
        if (ThreatScenario* existing = add(std::move(t))) {
            Evidence fresh{fs.src + "->" + fs.dst, *fs.pdr, fs.dr.value_or(0.0)};
            if (existing->source == ThreatSource::Simulation &&
                (!existing->evidence || fresh.dr > existing->evidence->dr))
                existing->evidence = fresh;
        }
    }

    for (const Concern& c : concerns) {
        auto it = kb.iso_threats.find(c.kind);
        if (it == kb.iso_threats.end()) continue;
        ThreatScenario t;
        t.asset = c.asset;
        t.source = ThreatSource::IsoCheck;
        t.threat_name = it->second.name;
        t.consequence = it->second.consequence + " (" + c.detail + ")";
        t.impacts = it->second.impacts;
        t.financial_only = it->second.financial_only;
        add(std::move(t));
    }

    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = scenario_id(i + 1);
    return out;
}

Level derive_probability(const ThreatScenario& scenario, const AssessmentConfig& cfg) {
    switch (scenario.source) {
        case ThreatSource::Simulation:
            return scenario.evidence && scenario.evidence->dr > cfg.dr_high ? Level::High
                                                                            : Level::Med;
        case ThreatSource::Kb:
            return scenario.exploit_available ? Level::High : Level::Med;
        default:
            return Level::Low;
    }
}

RiskEntry score_risk(const ThreatScenario& scenario, Level probability,
                     const std::map<std::string, Level>& impact_values,
                     const RiskCriteria& criteria) {
    RiskEntry e;
    e.scenario_id = scenario.id;
    e.asset = scenario.asset;
    e.threat_name = scenario.threat_name;
    e.probability = probability;
    e.impact_values = impact_values;
    for (const ImpactArea& area : criteria.areas) {
        auto it = impact_values.find(area.name);
        if (it == impact_values.end())
            throw MissingAreaError("no impact value for area \"" + area.name + "\"");
        e.relative_impact += static_cast<std::uint64_t>(area.rank) *
                             static_cast<std::uint64_t>(level_value(it->second));
    }
    e.risk_score = static_cast<std::uint64_t>(level_value(probability)) * e.relative_impact;
    return e;
}

std::string select_mitigation(const RiskEntry& entry, const RiskCriteria& criteria,
                              const AssessmentConfig& cfg, bool financial_only) {
    if (financial_only) return "transfer";
    double max = static_cast<double>(criteria.score_max());
    double score = static_cast<double>(entry.risk_score);
    if (score >= cfg.band_mitigate * max) return "mitigate";
    if (score >= cfg.band_defer * max) return "defer";
    return "accept";
}

std::vector<RiskEntry> build_risk_register(const std::vector<ThreatScenario>& threats,
                                           const RiskCriteria& criteria,
                                           const AssessmentConfig& cfg) {
    std::vector<RiskEntry> entries;
    for (const ThreatScenario& t : threats) {
        Level p = derive_probability(t, cfg);
        std::map<std::string, Level> values;
        for (const ImpactArea& area : criteria.areas) {
            auto it = t.impacts.find(area.name);
            values.emplace(area.name, it == t.impacts.end() ? Level::Low : it->second);
        }
        RiskEntry e = score_risk(t, p, values, criteria);
        e.mitigation = select_mitigation(e, criteria, cfg, t.financial_only);
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const RiskEntry& a, const RiskEntry& b) {
        return std::make_tuple(-static_cast<std::int64_t>(a.risk_score), a.asset, a.scenario_id) <
               std::make_tuple(-static_cast<std::int64_t>(b.risk_score), b.asset, b.scenario_id);
    });
    return entries;
}

}  // namespace aras::risk
