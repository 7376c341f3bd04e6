#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aras::sim {

// Labeled reproducible random stream. The generator is splitmix64 (64-bit
// state, 64-bit output); the initial state is a stable hash of
// (master_seed, label), so the same pair always replays the same sequence
// and distinct labels give independent-looking sequences.
class RngStream {
public:
    RngStream() = default;
    RngStream(std::uint64_t master_seed, std::string_view label);

    std::uint64_t next_u64();

    // Uniform draw in [0, 1) with 53 random bits.
    double next_unit();

    bool bernoulli(double p) { return next_unit() < p; }

    const std::string& label() const noexcept { return label_; }
    std::uint64_t state() const noexcept { return state_; }

private:
    std::string label_;
    std::uint64_t state_ = 0;
};

RngStream rng_stream(std::uint64_t master_seed, std::string_view label);

}  // namespace aras::sim
