#include "aras/sim/rng.hpp"

namespace aras::sim {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// FNV-1a over the label bytes; folded with the master seed this gives each
// label its own well-separated splitmix64 starting state.
std::uint64_t label_hash(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::string_view label)
    : label_(label), state_(mix(master_seed ^ label_hash(label))) {}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RngStream rng_stream(std::uint64_t master_seed, std::string_view label) {
    return RngStream(master_seed, label);
}

}  // namespace aras::sim
