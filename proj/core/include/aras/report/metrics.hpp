#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aras/net/network.hpp"

namespace aras::report {

// Packet Delivery Ratio: delivered / transmitted.
// Throws ZeroTransmittedError when pt == 0.
double pdr(std::uint64_t pd, std::uint64_t pt);

// Dropping Ratio: lost / transmitted. With pl = pt - pd the two ratios sum
// to one. Throws ZeroTransmittedError when pt == 0.
double dr(std::uint64_t pl, std::uint64_t pt);

inline double pdr(const net::FlowStats& st) { return pdr(st.pd, st.pt); }
inline double dr(const net::FlowStats& st) { return dr(st.pl, st.pt); }

struct FlowSummary {
    std::string src;
    std::string dst;
    std::uint64_t pt = 0;
    std::uint64_t pd = 0;
    std::uint64_t pl = 0;
    std::uint64_t in_flight = 0;
    std::optional<double> pdr;  // absent when pt == 0
    std::optional<double> dr;
};

std::vector<FlowSummary> summarize_flows(const net::NetworkState& net);

}  // namespace aras::report
