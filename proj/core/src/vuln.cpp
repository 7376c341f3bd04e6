#include "aras/vuln/vuln.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "aras/errors.hpp"
#include "jsonio.hpp"

namespace aras::vuln {

namespace {

using io::ObjectReader;
using nlohmann::json;

VulnRecord parse_record(const json& j, const std::string& path) {
    ObjectReader r(j, path);
    VulnRecord rec;
    rec.id = r.get_string("id");
    if (rec.id.empty()) throw ValidationError(path + ".id", "empty id");
    rec.product = r.get_string("product");
    if (rec.product.empty()) throw ValidationError(path + ".product", "empty product");
    auto version = [&](const char* key) {
        std::string text = r.get_string(key);
        try {
            return Version::parse(text);
        } catch (const ParseError& e) {
            throw ValidationError(path + "." + key, e.what());
        }
    };
    rec.version_min = version("version_min");
    rec.version_max = version("version_max");
    if (rec.version_max < rec.version_min)
        throw ValidationError(path + ".version_max", "below version_min");
    rec.base_score = r.get_double("base_score");
    if (!(rec.base_score >= 0.0 && rec.base_score <= 10.0))
        throw ValidationError(path + ".base_score", "must be in [0, 10]");
    rec.description = r.get_string_or("description", "");
    rec.exploit_available = r.get_bool_or("exploit_available", false);
    r.finish();
    return rec;
}

}  // namespace

VulnKb load_vuln_kb(std::string_view bytes) {
    json doc = io::parse_document(bytes);
    if (!doc.is_array()) throw ValidationError("$", "expected a top-level array");
    VulnKb kb;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        std::string path = "[" + std::to_string(i) + "]";
        VulnRecord rec = parse_record(doc[i], path);
        if (!ids.insert(rec.id).second)
            throw ValidationError(path + ".id", "duplicate id \"" + rec.id + "\"");
        kb.push_back(std::move(rec));
    }
    return kb;
}

VulnKb load_vuln_kb_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vulnerability KB " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read vulnerability KB " + path.string());
    return load_vuln_kb(buffer.str());
}

const VulnKb& builtin_vuln_kb() {
    static const VulnKb kb = [] {
        auto v = [](const char* s) { return Version::parse(s); };
        return VulnKb{
            {"KB-0001", "siemens-s7-fw", v("1.0"), v("2.9"), 8.1,
             "legacy PLC firmware accepts unauthenticated write commands", true},
            {"KB-0002", "siemens-s7-fw", v("3.0"), v("3.4"), 5.3,
             "captured control sessions can be replayed", false},
            {"KB-0003", "moxa-edge-gw", v("1.0"), v("1.6"), 6.5,
             "gateway web console ships with default credentials", true},
            {"KB-0004", "contoso-scada-suite", v("4.0"), v("4.9"), 7.8,
             "historian query endpoint allows SQL injection", false},
            {"KB-0005", "acme-sensor-fw", v("0.1"), v("1.2"), 4.2,
             "sensor telemetry is sent unencrypted", false},
            {"KB-0006", "initech-hmi", v("5.0"), v("5.5"), 4.8,
             "operator station stores billing exports world-readable", false},
        };
    }();
    return kb;
}

std::pair<Level, double> classify(double base_score, Level sensitivity,
                                  const ClassifyPolicy& policy) {
    if (!(base_score >= 0.0 && base_score <= 10.0))
        throw OutOfRangeError("base score " + std::to_string(base_score) + " outside [0, 10]");
    double effective = std::min(10.0, base_score + policy.bonus(sensitivity));
    Level severity = effective >= policy.high_threshold ? Level::High
                     : effective >= policy.med_threshold ? Level::Med
                                                         : Level::Low;
    return {severity, effective};
}

std::vector<VulnerabilityFinding> scan(const std::vector<discovery::AssetProfile>& profiles,
                                       const net::NetworkState& net, const VulnKb& kb,
                                       const ClassifyPolicy& policy) {
    std::vector<VulnerabilityFinding> findings;
    for (const discovery::AssetProfile& p : profiles) {
        const net::NodeSpec& node = net.node(net.index_of(p.asset.id));
        for (const net::SoftwareItem& sw : node.software) {
            for (const VulnRecord& rec : kb) {
                if (rec.product != sw.product) continue;
                if (sw.version < rec.version_min || rec.version_max < sw.version) continue;
                auto [severity, effective] =
                    classify(rec.base_score, node.data_sensitivity, policy);
                findings.push_back({p.asset.id, rec.id, sw.product, sw.version, rec.base_score,
                                    effective, severity, rec.exploit_available, rec.description});
            }
        }
    }
    std::sort(findings.begin(), findings.end(),
              [](const VulnerabilityFinding& a, const VulnerabilityFinding& b) {
                  return std::make_tuple(-level_value(a.severity), -a.effective_score, a.asset,
                                         a.vuln) < std::make_tuple(-level_value(b.severity),
                                                                   -b.effective_score, b.asset,
                                                                   b.vuln);
              });
    return findings;
}

}  // namespace aras::vuln
