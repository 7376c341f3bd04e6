#include "aras/report/health.hpp"

#include <algorithm>

namespace aras::report {

namespace {

// Iterative articulation-point search (Hopcroft-Tarjan lowlink rule), so
// deep topologies cannot overflow the call stack.
std::vector<bool> articulation_points(const net::NetworkState& net) {
    std::size_t n = net.node_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> ap(n, false);
    int timer = 0;
    struct Frame {
        std::size_t u;
        std::size_t parent;
        std::size_t edge_i;
    };
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    for (std::size_t s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> stack{{s, kNone, 0}};
        disc[s] = low[s] = timer++;
        std::size_t root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& adj = net.adjacency(f.u);
            if (f.edge_i < adj.size()) {
                std::size_t v = adj[f.edge_i].first;
                ++f.edge_i;
                if (disc[v] == -1) {
                    if (f.u == s) ++root_children;
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, f.u, 0});
                } else if (v != f.parent) {
                    low[f.u] = std::min(low[f.u], disc[v]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.u] = std::min(low[p.u], low[done.u]);
                    if (p.u != s && low[done.u] >= disc[p.u]) ap[p.u] = true;
                }
            }
        }
        if (root_children >= 2) ap[s] = true;
    }
    return ap;
}

}  // namespace

HealthReport network_health(const net::NetworkState& net) {
    HealthReport report;
    std::vector<bool> ap = articulation_points(net);
    for (std::size_t i = 0; i < net.node_count(); ++i)
        if (ap[i]) report.articulation_points.push_back(net.node(i).id);
    std::sort(report.articulation_points.begin(), report.articulation_points.end());

    std::uint64_t max_packets = 0;
    for (std::size_t li = 0; li < net.links().size(); ++li) {
        const net::LinkSpec& spec = net.link(li);
        std::uint64_t packets = net.links()[li].packets;
        report.links.push_back(
            {spec.a, spec.b, std::string(net::to_string(spec.link_class)), packets});
        max_packets = std::max(max_packets, packets);
    }
    if (max_packets > 0)
        for (const LinkLoad& l : report.links)
            if (l.packets == max_packets) report.max_utilization.push_back(l);

    for (const net::FlowSpec& f : net.scenario().flows)
        if (!net.reachable(net.index_of(f.src), net.index_of(f.dst)))
            report.unreachable_flows.emplace_back(f.src, f.dst);
    return report;
}

}  // namespace aras::report
