#include "aras/net/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "aras/attack/attack.hpp"
#include "aras/errors.hpp"

namespace aras::net {

std::string_view to_string(DropReason r) {
    switch (r) {
        case DropReason::LinkLoss: return "link-loss";
        case DropReason::Attack: return "attack";
        default: return "no-route";
    }
}

std::uint64_t LinkRuntime::effective_cost() const {
    if (advertised.empty()) return base_cost;
    std::uint64_t best = ~0ull;
    for (const auto& [attack, cost] : advertised) best = std::min(best, cost);
    return best;
}

NetworkState::NetworkState(Scenario scenario) : scenario_(std::move(scenario)) {
    std::size_t n = scenario_.nodes.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(scenario_.nodes[i].id, i);
    node_runtime_.resize(n);
    flow_stats_.resize(scenario_.flows.size());
    adjacency_.resize(n);
    attacks_by_node_.resize(n);
    links_.reserve(scenario_.links.size());
    for (std::size_t li = 0; li < scenario_.links.size(); ++li) {
        const LinkSpec& l = scenario_.links[li];
        LinkRuntime rt;
        rt.base_cost = l.cost;
        links_.push_back(rt);
        std::size_t a = index_.at(l.a);
        std::size_t b = index_.at(l.b);
        adjacency_[a].emplace_back(b, li);
        adjacency_[b].emplace_back(a, li);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end(), [this](const auto& x, const auto& y) {
            return scenario_.nodes[x.first].id < scenario_.nodes[y.first].id;
        });
    recompute_routing();
}

std::size_t NetworkState::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownTargetError("unknown node \"" + id + "\"");
    return it->second;
}

std::uint64_t NetworkState::distance(std::size_t from, std::size_t to) const {
    return dist_[from][to];
}

std::optional<std::size_t> NetworkState::next_hop(std::size_t from, std::size_t to) const {
    if (from == to) return std::nullopt;
    std::size_t hop = hop_[from][to];
    if (hop == static_cast<std::size_t>(-1)) return std::nullopt;
    return hop;
}

void NetworkState::dijkstra_from(std::size_t source) {
    std::vector<std::uint64_t>& dist = dist_[source];
    dist.assign(node_count(), kInfCost);
    dist[source] = 0;
    using Entry = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    frontier.emplace(0, source);
    while (!frontier.empty()) {
        auto [d, u] = frontier.top();
        frontier.pop();
        if (d != dist[u]) continue;
        for (const auto& [v, li] : adjacency_[u]) {
            std::uint64_t w = links_[li].effective_cost();
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                frontier.emplace(dist[v], v);
            }
        }
    }
}

void NetworkState::recompute_routing() {
    std::size_t n = node_count();
    dist_.resize(n);
    for (std::size_t s = 0; s < n; ++s) dijkstra_from(s);
    // Next hop toward dst: the id-smallest neighbor still on a minimum-cost
    // path. Applying this rule at every hop yields the lexicographically
    // smallest node-id sequence among all minimum-cost paths.
    hop_.assign(n, std::vector<std::size_t>(n, static_cast<std::size_t>(-1)));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t dst = 0; dst < n; ++dst) {
            if (u == dst || dist_[u][dst] == kInfCost) continue;
            for (const auto& [v, li] : adjacency_[u]) {
                if (dist_[v][dst] == kInfCost) continue;
                if (links_[li].effective_cost() + dist_[v][dst] == dist_[u][dst]) {
                    hop_[u][dst] = v;
                    break;
                }
            }
        }
    }
    ++routing_generation_;
}

sim::RngStream& NetworkState::stream(const std::string& label) {
    auto it = streams_.find(label);
    if (it == streams_.end())
        it = streams_.emplace(label, sim::RngStream(scenario_.master_seed, label)).first;
    return it->second;
}

std::optional<std::size_t> NetworkState::link_between(std::size_t a, std::size_t b) const {
    for (const auto& [v, li] : adjacency_[a])
        if (v == b) return li;
    return std::nullopt;
}

void NetworkState::charge_energy(std::size_t node_index, const AssessmentConfig& cfg) {
    double mj = energy_mj_for(cfg, scenario_.nodes[node_index].node_class);
    node_runtime_[node_index].energy_nj +=
        static_cast<std::uint64_t>(std::llround(mj * 1e6));
}

void NetworkState::install_attacks(std::vector<attack::AttackConfig> attacks) {
    attacks_ = std::move(attacks);
    attacks_by_node_.assign(node_count(), {});
    for (std::size_t i = 0; i < attacks_.size(); ++i)
        attacks_by_node_[index_of(attacks_[i].target)].push_back(i);
}

NetworkState build_network(const Scenario& s) { return NetworkState(s); }

std::vector<std::string> route(const NetworkState& net, const std::string& src,
                               const std::string& dst) {
    std::size_t u = net.index_of(src);
    std::size_t d = net.index_of(dst);
    if (u != d && net.distance(u, d) == NetworkState::kInfCost)
        throw UnreachableError("no path from \"" + src + "\" to \"" + dst + "\"");
    std::vector<std::string> path{net.node(u).id};
    while (u != d) {
        u = *net.next_hop(u, d);
        path.push_back(net.node(u).id);
    }
    return path;
}

ForwardDecision forward(NetworkState& net, const AssessmentConfig& cfg, PacketRef packet,
                        std::size_t at, sim::SimTime now) {
    const FlowSpec& flow = net.scenario().flows[packet.flow];
    net.charge_energy(at, cfg);
    FlowStats& fs = net.flow_stats(packet.flow);
    std::size_t dst = net.index_of(flow.dst);
    if (at == dst) {
        ++fs.pd;
        --fs.in_flight;
        ++net.node_runtime(at).received;
        return Deliver{};
    }
    for (std::size_t ai : net.attacks_at(at)) {
        const attack::AttackConfig& a = net.installed_attacks()[ai];
        if (a.kind != attack::AttackKind::IpDropping) continue;
        if (attack::blackhole_decide(a, now, net.stream("attack/" + a.target))) {
            ++fs.pl;
            --fs.in_flight;
            ++net.node_runtime(at).dropped;
            return Drop{DropReason::Attack};
        }
    }
    std::optional<std::size_t> nh = net.next_hop(at, dst);
    if (!nh) {
        ++fs.pl;
        --fs.in_flight;
        ++net.node_runtime(at).dropped;
        return Drop{DropReason::NoRoute};
    }
    std::size_t li = *net.link_between(at, *nh);
    const LinkSpec& spec = net.link(li);
    ++net.link_runtime(li).packets;
    if (spec.loss_prob > 0.0 &&
        net.stream("loss/" + spec.a + "--" + spec.b).bernoulli(spec.loss_prob)) {
        ++fs.pl;
        --fs.in_flight;
        ++net.node_runtime(at).dropped;
        return Drop{DropReason::LinkLoss};
    }
    return NextHop{*nh, li, spec.latency_us};
}

}  // namespace aras::net
