#pragma once

#include <compare>
#include <cstdint>
#include <limits>

namespace aras::sim {

// Virtual time in integer microseconds. Integer so that event ordering is
// exact and replay is bit-stable.
struct SimTime {
    std::uint64_t us = 0;

    static constexpr SimTime max() { return SimTime{std::numeric_limits<std::uint64_t>::max()}; }

    auto operator<=>(const SimTime&) const = default;
};

constexpr SimTime operator+(SimTime t, std::uint64_t delta_us) { return SimTime{t.us + delta_us}; }

}  // namespace aras::sim
