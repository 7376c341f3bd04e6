#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aras/discovery/discovery.hpp"
#include "aras/net/network.hpp"
#include "aras/report/anomaly.hpp"
#include "aras/sim/kernel.hpp"

namespace aras::net {

// Binds one network to one event kernel: traffic emission, hop-by-hop
// forwarding, discovery probes, sinkhole activation windows, the event log
// and periodic metric sampling. One Simulation is one run; nothing is
// shared across threads.
class Simulation {
public:
    explicit Simulation(NetworkState& net);

    // Schedules sinkhole start/end toggles for installed attacks.
    void setup_attacks();

    // Schedules the ping sweep described by the assessment config.
    void schedule_sweep();

    // Schedules one sweep over an explicit range from an explicit origin.
    void schedule_sweep(const std::string& probe_origin, const std::vector<Cidr>& ranges,
                        std::uint64_t probe_interval_us);

    // Schedules all of one flow's send events. Throws UnreachableError when
    // the flow has no route at scheduling time.
    void emit_traffic(std::size_t flow_index);
    void schedule_flows();

    sim::KernelStats run(sim::SimTime until = sim::SimTime::max());

    NetworkState& network() { return net_; }
    sim::Kernel& kernel() { return kernel_; }

    const std::vector<sim::Event>& events() const { return events_; }
    const std::vector<report::MetricSample>& metric_samples() const { return samples_; }
    // Discovered assets, sorted by address.
    std::vector<discovery::AssetRecord> discovered() const;

private:
    NetworkState& net_;
    sim::Kernel kernel_;
    std::vector<sim::Event> events_;
    std::vector<report::MetricSample> samples_;
    std::vector<discovery::AssetRecord> discovered_;

    struct Snapshot {
        std::uint64_t sent = 0, received = 0, dropped = 0, energy_nj = 0;
    };
    std::vector<Snapshot> last_sample_;
    std::uint64_t next_sample_at_ = 0;

    void step_packet(PacketRef packet, std::size_t at, sim::Event& ev);
    void emit_samples_up_to(std::uint64_t t_us);
    void sample_at(std::uint64_t t_us);
};

}  // namespace aras::net
