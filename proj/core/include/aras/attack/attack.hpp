#pragma once

#include <cstddef>
#include <vector>

#include "aras/attack/config.hpp"
#include "aras/net/network.hpp"
#include "aras/sim/rng.hpp"
#include "aras/sim/time.hpp"

namespace aras::attack {

// Validates the configs and installs them on the network so forwarding
// consults them. Throws UnknownTargetError for a target absent from the
// scenario. Sinkhole activation windows are driven by the simulation, which
// schedules toggle events at start_us / end_us.
void apply_attacks(net::NetworkState& net, const std::vector<AttackConfig>& attacks);

// Inside the window, drops with probability drop_prob using the dedicated
// per-target stream; outside it always forwards. Returns true to drop.
bool blackhole_decide(const AttackConfig& cfg, sim::SimTime now, sim::RngStream& rng);

// Overrides every link incident to the target with the advertised cost and
// recomputes routing. `attack_index` keys the override so overlapping
// sinkholes restore cleanly.
void sinkhole_activate(net::NetworkState& net, std::size_t attack_index);

// Removes the override and recomputes routing.
void sinkhole_deactivate(net::NetworkState& net, std::size_t attack_index);

}  // namespace aras::attack
