#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aras/net/scenario.hpp"
#include "aras/sim/rng.hpp"
#include "aras/sim/time.hpp"

namespace aras::net {

// Per-flow packet accounting. pt == pd + pl + in_flight at every instant.
struct FlowStats {
    std::uint64_t pt = 0;         // transmitted
    std::uint64_t pd = 0;         // delivered
    std::uint64_t pl = 0;         // lost
    std::uint64_t in_flight = 0;

    bool operator==(const FlowStats&) const = default;
};

struct NodeRuntime {
    std::uint64_t sent = 0;      // flow packets emitted here as source
    std::uint64_t received = 0;  // flow packets delivered here as destination
    std::uint64_t dropped = 0;   // drops attributed to this node
    std::uint64_t energy_nj = 0; // consumed energy, integer nanojoules

    double energy_mj() const { return static_cast<double>(energy_nj) / 1e6; }
};

struct LinkRuntime {
    std::uint64_t base_cost = 1;
    // Active sinkhole advertisements keyed by attack index; effective cost is
    // the smallest advertised value, or base_cost with none active.
    std::map<std::size_t, std::uint64_t> advertised;
    std::uint64_t packets = 0;  // packets offered to this link, either direction

    std::uint64_t effective_cost() const;
};

struct PacketRef {
    std::size_t flow = 0;
    std::uint64_t seq = 0;
};

enum class DropReason { LinkLoss, Attack, NoRoute };
std::string_view to_string(DropReason r);

struct Deliver {};
struct NextHop {
    std::size_t node = 0;
    std::size_t link = 0;
    std::uint64_t latency_us = 0;
};
struct Drop {
    DropReason reason = DropReason::LinkLoss;
};
using ForwardDecision = std::variant<Deliver, NextHop, Drop>;

// Built topology plus all run-scoped mutable state: routing, counters,
// attack overrides and the labeled random streams.
class NetworkState {
public:
    static constexpr std::uint64_t kInfCost = ~0ull;

    explicit NetworkState(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }

    std::size_t node_count() const { return scenario_.nodes.size(); }
    bool has_node(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;  // throws UnknownTargetError
    const NodeSpec& node(std::size_t i) const { return scenario_.nodes[i]; }
    NodeRuntime& node_runtime(std::size_t i) { return node_runtime_[i]; }
    const NodeRuntime& node_runtime(std::size_t i) const { return node_runtime_[i]; }

    const std::vector<LinkRuntime>& links() const { return links_; }
    LinkRuntime& link_runtime(std::size_t i) { return links_[i]; }
    const LinkSpec& link(std::size_t i) const { return scenario_.links[i]; }

    FlowStats& flow_stats(std::size_t i) { return flow_stats_[i]; }
    const std::vector<FlowStats>& all_flow_stats() const { return flow_stats_; }

    // Adjacency of a node: (neighbor index, link index), sorted by neighbor id.
    const std::vector<std::pair<std::size_t, std::size_t>>& adjacency(std::size_t i) const {
        return adjacency_[i];
    }

    // Minimum-cost distance over effective link costs; kInfCost when
    // disconnected.
    std::uint64_t distance(std::size_t from, std::size_t to) const;

    // Next hop on the lexicographically smallest minimum-cost path, or
    // nullopt when unreachable / already there.
    std::optional<std::size_t> next_hop(std::size_t from, std::size_t to) const;

    bool reachable(std::size_t from, std::size_t to) const {
        return distance(from, to) != kInfCost;
    }

    // Recomputes the all-pairs routing table from current effective costs.
    void recompute_routing();
    std::uint64_t routing_generation() const { return routing_generation_; }

    sim::RngStream& stream(const std::string& label);

    // Index of the link joining two nodes, if any.
    std::optional<std::size_t> link_between(std::size_t a, std::size_t b) const;

    void charge_energy(std::size_t node_index, const AssessmentConfig& cfg);

    // Installed attack behaviors (see attack::apply_attacks).
    const std::vector<attack::AttackConfig>& installed_attacks() const { return attacks_; }
    const std::vector<std::size_t>& attacks_at(std::size_t node_index) const {
        return attacks_by_node_[node_index];
    }
    void install_attacks(std::vector<attack::AttackConfig> attacks);

private:
    Scenario scenario_;
    std::map<std::string, std::size_t> index_;
    std::vector<NodeRuntime> node_runtime_;
    std::vector<LinkRuntime> links_;
    std::vector<FlowStats> flow_stats_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
    std::vector<std::vector<std::uint64_t>> dist_;      // [from][to]
    std::vector<std::vector<std::size_t>> hop_;         // [from][to], SIZE_MAX = none
    std::uint64_t routing_generation_ = 0;
    std::map<std::string, sim::RngStream> streams_;
    std::vector<attack::AttackConfig> attacks_;
    std::vector<std::vector<std::size_t>> attacks_by_node_;

    void dijkstra_from(std::size_t source);
};

// Validates the scenario structurally and returns the built network with a
// fresh routing table and zeroed counters.
NetworkState build_network(const Scenario& s);

// Minimum total cost path src -> dst, ties broken by the lexicographically
// smallest node-id sequence. Throws UnreachableError when no path exists.
std::vector<std::string> route(const NetworkState& net, const std::string& src,
                               const std::string& dst);

// One forwarding step for a packet sitting at `at`. Applies attack behavior,
// egress link loss, statistics and the per-class energy charge.
ForwardDecision forward(NetworkState& net, const AssessmentConfig& cfg, PacketRef packet,
                        std::size_t at, sim::SimTime now);

}  // namespace aras::net
