#include "aras/attack/attack.hpp"

#include "aras/errors.hpp"

namespace aras::attack {

std::string_view to_string(AttackKind k) {
    return k == AttackKind::IpDropping ? "ip-dropping" : "sinkhole";
}

AttackKind attack_kind_from_string(std::string_view s) {
    if (s == "ip-dropping") return AttackKind::IpDropping;
    if (s == "sinkhole") return AttackKind::Sinkhole;
    throw ParseError("unknown attack kind \"" + std::string(s) + "\"");
}

void apply_attacks(net::NetworkState& net, const std::vector<AttackConfig>& attacks) {
    for (const AttackConfig& a : attacks)
        if (!net.has_node(a.target))
            throw UnknownTargetError("attack target \"" + a.target + "\" is not in the scenario");
    net.install_attacks(attacks);
}

bool blackhole_decide(const AttackConfig& cfg, sim::SimTime now, sim::RngStream& rng) {
    // No draw outside the window, so traces match the baseline exactly there.
    if (!cfg.active_at(now.us)) return false;
    return rng.bernoulli(cfg.drop_prob);
}

void sinkhole_activate(net::NetworkState& net, std::size_t attack_index) {
    const AttackConfig& cfg = net.installed_attacks()[attack_index];
    std::size_t target = net.index_of(cfg.target);
    for (const auto& [neighbor, li] : net.adjacency(target))
        net.link_runtime(li).advertised[attack_index] = cfg.advertised_cost;
    net.recompute_routing();
}

void sinkhole_deactivate(net::NetworkState& net, std::size_t attack_index) {
    const AttackConfig& cfg = net.installed_attacks()[attack_index];
    std::size_t target = net.index_of(cfg.target);
    for (const auto& [neighbor, li] : net.adjacency(target))
        net.link_runtime(li).advertised.erase(attack_index);
    net.recompute_routing();
}

}  // namespace aras::attack
