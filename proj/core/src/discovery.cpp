#include "aras/discovery/discovery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "aras/errors.hpp"
#include "aras/net/simulation.hpp"

namespace aras::discovery {

std::string_view to_string(ContainerMode m) {
    switch (m) {
        case ContainerMode::Stored: return "stored";
        case ContainerMode::Transported: return "transported";
        default: return "processed";
    }
}

std::vector<AssetRecord> ping_sweep(net::NetworkState& net, const std::string& probe_origin,
                                    const Cidr& range, std::uint64_t probe_interval_us) {
    net::Simulation sim(net);
    sim.schedule_sweep(probe_origin, {range}, probe_interval_us);
    sim.run();
    return sim.discovered();
}

std::vector<AssetProfile> profile_assets(const std::vector<AssetRecord>& records,
                                         const AssessmentConfig& cfg,
                                         const net::NetworkState& net) {
    const std::map<net::NodeClass, ProfileDefaults>& defaults =
        cfg.class_defaults ? *cfg.class_defaults : builtin_class_defaults();
    std::vector<AssetProfile> profiles;
    for (const AssetRecord& rec : records) {
        auto def = defaults.find(rec.node_class);
        if (def == defaults.end())
            throw MissingClassDefaultError("no profile defaults for class \"" +
                                           std::string(net::to_string(rec.node_class)) + "\"");
        AssetProfile p;
        p.asset = rec;
        p.owner = def->second.owner;
        p.value = def->second.value;
        p.requirements = def->second.requirements;
        p.most_important = def->second.most_important;
        auto ov = cfg.overrides.find(rec.id);
        if (ov != cfg.overrides.end()) {
            if (ov->second.owner) p.owner = *ov->second.owner;
            if (ov->second.value) p.value = *ov->second.value;
            if (ov->second.requirements) p.requirements = *ov->second.requirements;
            if (ov->second.most_important) p.most_important = *ov->second.most_important;
        }
        p.requirements.insert(p.most_important);
        profiles.push_back(std::move(p));
    }
    // Criticality rank: value desc, data sensitivity desc, id asc.
    std::stable_sort(profiles.begin(), profiles.end(),
                     [&](const AssetProfile& a, const AssetProfile& b) {
                         int sa = level_value(
                             net.node(net.index_of(a.asset.id)).data_sensitivity);
                         int sb = level_value(
                             net.node(net.index_of(b.asset.id)).data_sensitivity);
                         return std::make_tuple(-level_value(a.value), -sa, a.asset.id) <
                                std::make_tuple(-level_value(b.value), -sb, b.asset.id);
                     });
    for (std::size_t i = 0; i < profiles.size(); ++i)
        profiles[i].priority = static_cast<std::uint32_t>(i + 1);
    return profiles;
}

std::vector<Container> map_containers(const std::vector<AssetProfile>& profiles,
                                      const net::NetworkState& net) {
    std::vector<Container> out;
    std::set<std::tuple<std::string, std::string, int>> seen;
    auto emit = [&](const std::string& asset, const std::string& location, ContainerMode mode) {
        if (seen.emplace(asset, location, static_cast<int>(mode)).second)
            out.push_back({asset, location, mode});
    };
    // Flow paths under current routing; unreachable flows carry nothing.
    std::vector<std::vector<std::string>> paths;
    for (const net::FlowSpec& f : net.scenario().flows) {
        std::size_t src = net.index_of(f.src);
        std::size_t dst = net.index_of(f.dst);
        if (net.reachable(src, dst))
            paths.push_back(route(net, f.src, f.dst));
        else
            paths.push_back({});
    }
    for (const AssetProfile& p : profiles) {
        const std::string& id = p.asset.id;
        emit(id, id, ContainerMode::Stored);
        for (const std::vector<std::string>& path : paths) {
            if (std::find(path.begin(), path.end(), id) == path.end()) continue;
            for (const std::string& hop : path) emit(id, hop, ContainerMode::Transported);
            for (const std::string& endpoint : {path.front(), path.back()}) {
                net::NodeClass cls = net.node(net.index_of(endpoint)).node_class;
                if (cls == net::NodeClass::Gateway || cls == net::NodeClass::ScadaServer)
                    emit(id, endpoint, ContainerMode::Processed);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Container& a, const Container& b) {
        return std::make_tuple(a.asset, static_cast<int>(a.mode), a.location) <
               std::make_tuple(b.asset, static_cast<int>(b.mode), b.location);
    });
    return out;
}

}  // namespace aras::discovery
