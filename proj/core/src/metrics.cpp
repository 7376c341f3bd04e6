#include "aras/report/metrics.hpp"

#include "aras/errors.hpp"

namespace aras::report {

double pdr(std::uint64_t pd, std::uint64_t pt) {
    if (pt == 0) throw ZeroTransmittedError("PDR undefined with zero transmitted packets");
    return static_cast<double>(pd) / static_cast<double>(pt);
}

double dr(std::uint64_t pl, std::uint64_t pt) {
    if (pt == 0) throw ZeroTransmittedError("DR undefined with zero transmitted packets");
    return static_cast<double>(pl) / static_cast<double>(pt);
}

std::vector<FlowSummary> summarize_flows(const net::NetworkState& net) {
    std::vector<FlowSummary> out;
    const auto& stats = net.all_flow_stats();
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const net::FlowSpec& f = net.scenario().flows[i];
        const net::FlowStats& s = stats[i];
        FlowSummary summary{f.src, f.dst, s.pt, s.pd, s.pl, s.in_flight, std::nullopt,
                            std::nullopt};
        if (s.pt > 0) {
            summary.pdr = pdr(s.pd, s.pt);
            summary.dr = dr(s.pl, s.pt);
        }
        out.push_back(std::move(summary));
    }
    return out;
}

}  // namespace aras::report
