#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "aras/sim/time.hpp"

namespace aras::attack {

enum class AttackKind { IpDropping, Sinkhole };

std::string_view to_string(AttackKind k);
AttackKind attack_kind_from_string(std::string_view s);

// A compromised node and what it does. The window defaults to [0, inf) so a
// config without times reproduces an always-on attack; bounded windows give
// the before/after contrast the assessment phase compares against.
struct AttackConfig {
    AttackKind kind = AttackKind::IpDropping;
    std::string target;
    std::uint64_t start_us = 0;
    std::uint64_t end_us = std::numeric_limits<std::uint64_t>::max();
    double drop_prob = 0.0;            // ip-dropping only
    std::uint64_t advertised_cost = 1; // sinkhole only

    bool active_at(std::uint64_t t_us) const { return t_us >= start_us && t_us < end_us; }
    bool active_at(sim::SimTime t) const { return active_at(t.us); }
};

}  // namespace aras::attack
