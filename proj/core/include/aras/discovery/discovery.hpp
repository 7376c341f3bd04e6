#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aras/addr.hpp"
#include "aras/config.hpp"
#include "aras/level.hpp"
#include "aras/net/network.hpp"

namespace aras::discovery {

// What a probe reply reveals about a device. Simulated discovery is
// truthful: fields mirror the node's spec.
struct AssetRecord {
    std::string id;
    Ipv4 addr;
    Mac mac;
    std::string os;
    net::Medium medium = net::Medium::Wired;
    net::NodeClass node_class = net::NodeClass::ItHost;
};

struct AssetProfile {
    AssetRecord asset;
    std::string owner;
    Level value = Level::Low;
    std::set<SecurityRequirement> requirements;
    SecurityRequirement most_important = SecurityRequirement::Availability;
    std::uint32_t priority = 0;  // 1 = most critical, unique among profiles
};

enum class ContainerMode { Stored, Transported, Processed };
std::string_view to_string(ContainerMode m);

struct Container {
    std::string asset;     // node id of the profiled asset
    std::string location;  // node id where it is stored/transported/processed
    ContainerMode mode = ContainerMode::Stored;
};

// Agentless sweep of one CIDR block from probe_origin. Runs its own event
// loop over the network: probes consume virtual time and probe energy but
// touch no flow statistics. Result holds exactly the reachable, responding,
// in-range nodes, sorted by address.
std::vector<AssetRecord> ping_sweep(net::NetworkState& net, const std::string& probe_origin,
                                    const Cidr& range, std::uint64_t probe_interval_us = 1000);

// Profiles discovered assets from class defaults plus per-node overrides and
// assigns criticality ranks: value desc, data sensitivity desc, id asc.
// Throws MissingClassDefaultError when explicit class_defaults omit a class
// present in the records.
std::vector<AssetProfile> profile_assets(const std::vector<AssetRecord>& records,
                                         const AssessmentConfig& cfg,
                                         const net::NetworkState& net);

// Maps each profiled asset to the locations where it is stored, transported
// or processed, based on current routing and the scenario's flows.
std::vector<Container> map_containers(const std::vector<AssetProfile>& profiles,
                                      const net::NetworkState& net);

}  // namespace aras::discovery
