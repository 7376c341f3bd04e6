#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "aras/errors.hpp"
#include "aras/net/scenario.hpp"
#include "aras/risk/risk.hpp"
#include "jsonio.hpp"

namespace aras::net {

namespace {

using io::ObjectReader;
using nlohmann::json;

// Re-throws ParseError from value parsers as ValidationError at `at`, so
// scenario diagnostics always carry the document path.
template <class F>
auto at_path(const std::string& at, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ValidationError(at, e.what());
    }
}

Level read_level(ObjectReader& r, const char* key, Level def) {
    const json* v = r.optional(key);
    if (!v) return def;
    std::string s = ObjectReader::as_string(*v, r.item_path(key));
    return at_path(r.item_path(key), [&] { return level_from_string(s); });
}

std::vector<SoftwareItem> parse_software(const json& arr, const std::string& path) {
    std::vector<SoftwareItem> items;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string at = path + "[" + std::to_string(i) + "]";
        ObjectReader r(arr[i], at);
        SoftwareItem item;
        item.product = r.get_string("product");
        if (item.product.empty()) throw ValidationError(at + ".product", "empty product name");
        std::string version = r.get_string("version");
        item.version = at_path(at + ".version", [&] { return Version::parse(version); });
        r.finish();
        items.push_back(std::move(item));
    }
    return items;
}

NodeSpec parse_node(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    NodeSpec n;
    n.id = r.get_string("id");
    if (n.id.empty()) throw ValidationError(path + ".id", "empty node id");
    std::string addr = r.get_string("addr");
    n.addr = at_path(path + ".addr", [&] { return Ipv4::parse(addr); });
    if (const json* mac = r.optional("mac")) {
        std::string text = ObjectReader::as_string(*mac, path + ".mac");
        n.mac = at_path(path + ".mac", [&] { return Mac::parse(text); });
    } else {
        n.mac = Mac::from_ipv4(n.addr);
    }
    std::string cls = r.get_string("class");
    n.node_class = at_path(path + ".class", [&] { return node_class_from_string(cls); });
    n.os = r.get_string_or("os", "");
    if (const json* medium = r.optional("medium")) {
        std::string text = ObjectReader::as_string(*medium, path + ".medium");
        n.medium = at_path(path + ".medium", [&] { return medium_from_string(text); });
    }
    n.responds_to_ping = r.get_bool_or("responds_to_ping", true);
    if (const json* software = r.optional("software")) {
        if (!software->is_array()) throw ValidationError(path + ".software", "expected an array");
        n.software = parse_software(*software, path + ".software");
    }
    n.data_sensitivity = read_level(r, "data_sensitivity", Level::Low);
    r.finish();
    return n;
}

LinkSpec parse_link(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    LinkSpec l;
    l.a = r.get_string("a");
    l.b = r.get_string("b");
    if (l.a == l.b) throw ValidationError(path + ".b", "self-loop link");
    l.latency_us = r.get_u64_or("latency_us", 1000);
    if (l.latency_us == 0) throw ValidationError(path + ".latency_us", "must be positive");
    l.loss_prob = r.get_double_or("loss_prob", 0.0);
    if (!(l.loss_prob >= 0.0 && l.loss_prob <= 1.0))
        throw ValidationError(path + ".loss_prob", "must be in [0, 1]");
    l.cost = r.get_u64_or("cost", 1);
    if (l.cost == 0) throw ValidationError(path + ".cost", "must be positive");
    if (const json* cls = r.optional("class")) {
        std::string text = ObjectReader::as_string(*cls, path + ".class");
        l.link_class = at_path(path + ".class", [&] { return link_class_from_string(text); });
    }
    r.finish();
    return l;
}

FlowSpec parse_flow(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    FlowSpec f;
    f.src = r.get_string("src");
    f.dst = r.get_string("dst");
    if (f.src == f.dst) throw ValidationError(path + ".dst", "flow endpoints must differ");
    f.packets = r.get_u64_or("packets", 1);
    if (f.packets == 0) throw ValidationError(path + ".packets", "must be positive");
    f.interval_us = r.get_u64_or("interval_us", 1000);
    if (f.interval_us == 0) throw ValidationError(path + ".interval_us", "must be positive");
    f.start_us = r.get_u64_or("start_us", 0);
    r.finish();
    return f;
}

attack::AttackConfig parse_attack(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    attack::AttackConfig a;
    std::string kind = r.get_string("kind");
    a.kind = at_path(path + ".kind", [&] { return attack::attack_kind_from_string(kind); });
    a.target = r.get_string("target");
    a.start_us = r.get_u64_or("start_us", 0);
    a.end_us = r.get_u64_or("end_us", std::numeric_limits<std::uint64_t>::max());
    if (a.start_us >= a.end_us) throw ValidationError(path + ".end_us", "empty attack window");
    if (a.kind == attack::AttackKind::IpDropping) {
        if (r.has("advertised_cost"))
            throw ValidationError(path + ".advertised_cost", "not valid for ip-dropping");
        a.drop_prob = r.get_double("drop_prob");
        if (!(a.drop_prob >= 0.0 && a.drop_prob <= 1.0))
            throw ValidationError(path + ".drop_prob", "must be in [0, 1]");
    } else {
        if (r.has("drop_prob"))
            throw ValidationError(path + ".drop_prob", "not valid for sinkhole");
        a.advertised_cost = r.get_u64("advertised_cost");
        if (a.advertised_cost == 0)
            throw ValidationError(path + ".advertised_cost", "must be positive");
    }
    r.finish();
    return a;
}

std::set<SecurityRequirement> parse_requirements(const json& arr, const std::string& path) {
    if (!arr.is_array()) throw ValidationError(path, "expected an array");
    std::set<SecurityRequirement> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string at = path + "[" + std::to_string(i) + "]";
        std::string text = ObjectReader::as_string(arr[i], at);
        out.insert(at_path(at, [&] { return security_requirement_from_string(text); }));
    }
    return out;
}

ProfileDefaults parse_profile_defaults(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    ProfileDefaults d;
    d.owner = r.get_string("owner");
    std::string value = r.get_string("value");
    d.value = at_path(path + ".value", [&] { return level_from_string(value); });
    std::string most = r.get_string("most_important");
    d.most_important =
        at_path(path + ".most_important", [&] { return security_requirement_from_string(most); });
    if (const json* reqs = r.optional("requirements"))
        d.requirements = parse_requirements(*reqs, path + ".requirements");
    else
        d.requirements = {d.most_important};
    if (!d.requirements.count(d.most_important))
        throw ValidationError(path + ".most_important", "not in the requirements set");
    r.finish();
    return d;
}

ProfileOverride parse_profile_override(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    ProfileOverride o;
    if (const json* owner = r.optional("owner"))
        o.owner = ObjectReader::as_string(*owner, path + ".owner");
    if (const json* value = r.optional("value")) {
        std::string text = ObjectReader::as_string(*value, path + ".value");
        o.value = at_path(path + ".value", [&] { return level_from_string(text); });
    }
    if (const json* reqs = r.optional("requirements"))
        o.requirements = parse_requirements(*reqs, path + ".requirements");
    if (const json* most = r.optional("most_important")) {
        std::string text = ObjectReader::as_string(*most, path + ".most_important");
        o.most_important =
            at_path(path + ".most_important", [&] { return security_requirement_from_string(text); });
    }
    r.finish();
    return o;
}

ClassifyPolicy parse_classify(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    ClassifyPolicy p;
    p.high_threshold = r.get_double_or("high_threshold", p.high_threshold);
    p.med_threshold = r.get_double_or("med_threshold", p.med_threshold);
    if (p.med_threshold > p.high_threshold)
        throw ValidationError(path + ".med_threshold", "exceeds high_threshold");
    if (const json* bonus = r.get_object_opt("bonus")) {
        ObjectReader b(*bonus, path + ".bonus");
        p.bonus_low = b.get_double_or("low", p.bonus_low);
        p.bonus_med = b.get_double_or("med", p.bonus_med);
        p.bonus_high = b.get_double_or("high", p.bonus_high);
        b.finish();
    }
    r.finish();
    return p;
}

AnomalyConfig parse_anomaly(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    AnomalyConfig a;
    std::uint64_t window = r.get_u64_or("window", a.window);
    if (window < 2) throw ValidationError(path + ".window", "must be at least 2");
    a.window = static_cast<std::uint32_t>(window);
    a.k = r.get_double_or("k", a.k);
    if (a.k < 0.0) throw ValidationError(path + ".k", "must be non-negative");
    if (const json* absolute = r.optional("absolute"))
        a.absolute = ObjectReader::as_double(*absolute, path + ".absolute");
    r.finish();
    return a;
}

double unit_interval(ObjectReader& r, const char* key, double def) {
    double v = r.get_double_or(key, def);
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError(r.item_path(key), "must be in [0, 1]");
    return v;
}

AssessmentConfig parse_assessment(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    AssessmentConfig c;
    if (const json* origin = r.optional("probe_origin"))
        c.probe_origin = ObjectReader::as_string(*origin, path + ".probe_origin");
    if (const json* ranges = r.get_array_opt("sweep_ranges")) {
        for (std::size_t i = 0; i < ranges->size(); ++i) {
            std::string at = path + ".sweep_ranges[" + std::to_string(i) + "]";
            std::string text = ObjectReader::as_string((*ranges)[i], at);
            c.sweep_ranges.push_back(at_path(at, [&] { return Cidr::parse(text); }));
        }
    }
    if (const json* defaults = r.get_object_opt("class_defaults")) {
        std::map<NodeClass, ProfileDefaults> by_class;
        for (const auto& item : defaults->items()) {
            std::string at = path + ".class_defaults." + item.key();
            NodeClass cls = at_path(at, [&] { return node_class_from_string(item.key()); });
            by_class.emplace(cls, parse_profile_defaults(item.value(), at));
        }
        c.class_defaults = std::move(by_class);
    }
    if (const json* overrides = r.get_object_opt("overrides")) {
        for (const auto& item : overrides->items()) {
            std::string at = path + ".overrides." + item.key();
            c.overrides.emplace(item.key(), parse_profile_override(item.value(), at));
        }
    }
    if (const json* areas = r.get_array_opt("impact_areas")) {
        for (std::size_t i = 0; i < areas->size(); ++i) {
            std::string at = path + ".impact_areas[" + std::to_string(i) + "]";
            ObjectReader a((*areas)[i], at);
            ImpactArea area;
            area.name = a.get_string("name");
            std::uint64_t rank = a.get_u64("rank");
            if (rank == 0 || rank > 0xffffffffull)
                throw ValidationError(at + ".rank", "must be a positive 32-bit integer");
            area.rank = static_cast<std::uint32_t>(rank);
            a.finish();
            c.impact_areas.push_back(std::move(area));
        }
    }
    if (const json* rules = r.get_object_opt("probability_rules")) {
        ObjectReader p(*rules, path + ".probability_rules");
        c.dr_high = unit_interval(p, "dr_high", c.dr_high);
        p.finish();
    }
    if (const json* bands = r.get_object_opt("mitigation_bands")) {
        ObjectReader b(*bands, path + ".mitigation_bands");
        c.band_mitigate = unit_interval(b, "mitigate", c.band_mitigate);
        c.band_defer = unit_interval(b, "defer", c.band_defer);
        b.finish();
        if (c.band_defer > c.band_mitigate)
            throw ValidationError(path + ".mitigation_bands.defer", "exceeds the mitigate band");
    }
    c.pdr_threshold = unit_interval(r, "pdr_threshold", c.pdr_threshold);
    if (const json* floors = r.get_object_opt("version_floors")) {
        for (const auto& item : floors->items()) {
            std::string at = path + ".version_floors." + item.key();
            std::string text = ObjectReader::as_string(item.value(), at);
            c.version_floors.emplace(item.key(), at_path(at, [&] { return Version::parse(text); }));
        }
    }
    if (const json* classify = r.get_object_opt("classify"))
        c.classify = parse_classify(*classify, path + ".classify");
    if (const json* anomaly = r.get_object_opt("anomaly"))
        c.anomaly = parse_anomaly(*anomaly, path + ".anomaly");
    c.metrics_interval_us = r.get_u64_or("metrics_interval_us", c.metrics_interval_us);
    if (c.metrics_interval_us == 0)
        throw ValidationError(path + ".metrics_interval_us", "must be positive");
    c.probe_interval_us = r.get_u64_or("probe_interval_us", c.probe_interval_us);
    if (c.probe_interval_us == 0)
        throw ValidationError(path + ".probe_interval_us", "must be positive");
    if (const json* kb = r.optional("vuln_kb"))
        c.vuln_kb = ObjectReader::as_string(*kb, path + ".vuln_kb");
    if (const json* kb = r.optional("threat_kb"))
        c.threat_kb = ObjectReader::as_string(*kb, path + ".threat_kb");
    if (const json* energy = r.get_object_opt("energy_mj_per_packet")) {
        for (const auto& item : energy->items()) {
            std::string at = path + ".energy_mj_per_packet." + item.key();
            NodeClass cls = at_path(at, [&] { return node_class_from_string(item.key()); });
            double mj = ObjectReader::as_double(item.value(), at);
            if (mj < 0.0) throw ValidationError(at, "must be non-negative");
            c.energy_mj_per_packet.emplace(cls, mj);
        }
    }
    r.finish();
    return c;
}

void validate_references(const Scenario& s) {
    std::map<std::string, std::size_t> ids;
    std::set<std::uint32_t> addrs;
    std::set<std::uint64_t> macs;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const NodeSpec& n = s.nodes[i];
        std::string at = "nodes[" + std::to_string(i) + "]";
        if (!ids.emplace(n.id, i).second)
            throw ValidationError(at + ".id", "duplicate node id \"" + n.id + "\"");
        if (!addrs.insert(n.addr.value).second)
            throw ValidationError(at + ".addr", "duplicate address " + n.addr.str());
        if (!macs.insert(n.mac.value).second)
            throw ValidationError(at + ".mac", "duplicate MAC " + n.mac.str());
    }
    auto known = [&](const std::string& id) { return ids.count(id) != 0; };
    std::set<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < s.links.size(); ++i) {
        const LinkSpec& l = s.links[i];
        std::string at = "links[" + std::to_string(i) + "]";
        if (!known(l.a)) throw ValidationError(at + ".a", "unknown node \"" + l.a + "\"");
        if (!known(l.b)) throw ValidationError(at + ".b", "unknown node \"" + l.b + "\"");
        auto key = l.a < l.b ? std::make_pair(l.a, l.b) : std::make_pair(l.b, l.a);
        if (!pairs.insert(key).second)
            throw ValidationError(at, "duplicate link between \"" + l.a + "\" and \"" + l.b + "\"");
    }
    for (std::size_t i = 0; i < s.flows.size(); ++i) {
        const FlowSpec& f = s.flows[i];
        std::string at = "flows[" + std::to_string(i) + "]";
        if (!known(f.src)) throw ValidationError(at + ".src", "unknown node \"" + f.src + "\"");
        if (!known(f.dst)) throw ValidationError(at + ".dst", "unknown node \"" + f.dst + "\"");
    }
    for (std::size_t i = 0; i < s.attacks.size(); ++i) {
        const attack::AttackConfig& a = s.attacks[i];
        std::string at = "attacks[" + std::to_string(i) + "]";
        if (!known(a.target)) throw ValidationError(at + ".target", "unknown node \"" + a.target + "\"");
    }
    if (s.assessment.probe_origin && !known(*s.assessment.probe_origin))
        throw ValidationError("assessment.probe_origin",
                              "unknown node \"" + *s.assessment.probe_origin + "\"");
    for (const auto& [id, unused] : s.assessment.overrides)
        if (!known(id))
            throw ValidationError("assessment.overrides." + id, "unknown node \"" + id + "\"");
    try {
        risk::define_criteria(s.assessment.impact_areas.empty() ? default_impact_areas()
                                                                : s.assessment.impact_areas);
    } catch (const Error& e) {
        throw ValidationError("assessment.impact_areas", e.what());
    }
}

}  // namespace

Scenario load_scenario(std::string_view bytes) {
    json doc = io::parse_document(bytes);
    ObjectReader r(doc, "");
    Scenario s;
    s.name = r.get_string("name");
    if (s.name.empty()) throw ValidationError("name", "empty scenario name");
    s.master_seed = r.get_u64_or("master_seed", 0);
    const json& nodes = r.get_array("nodes");
    if (nodes.empty()) throw ValidationError("nodes", "at least one node required");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s.nodes.push_back(parse_node(nodes[i], "nodes[" + std::to_string(i) + "]"));
    if (const json* links = r.get_array_opt("links"))
        for (std::size_t i = 0; i < links->size(); ++i)
            s.links.push_back(parse_link((*links)[i], "links[" + std::to_string(i) + "]"));
    if (const json* flows = r.get_array_opt("flows"))
        for (std::size_t i = 0; i < flows->size(); ++i)
            s.flows.push_back(parse_flow((*flows)[i], "flows[" + std::to_string(i) + "]"));
    if (const json* attacks = r.get_array_opt("attacks"))
        for (std::size_t i = 0; i < attacks->size(); ++i)
            s.attacks.push_back(parse_attack((*attacks)[i], "attacks[" + std::to_string(i) + "]"));
    if (const json* assessment = r.get_object_opt("assessment"))
        s.assessment = parse_assessment(*assessment, "assessment");
    r.finish();
    validate_references(s);
    return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read scenario file " + path.string());
    return load_scenario(buffer.str());
}

}  // namespace aras::net
