#include "aras/net/simulation.hpp"

#include <algorithm>
#include <set>

#include "aras/attack/attack.hpp"
#include "aras/errors.hpp"

namespace aras::net {

Simulation::Simulation(NetworkState& net) : net_(net) {
    last_sample_.resize(net_.node_count());
    next_sample_at_ = net_.scenario().assessment.metrics_interval_us;
    kernel_.set_observer([this](const sim::Event& e) { events_.push_back(e); });
    kernel_.set_advance_hook([this](sim::SimTime, sim::SimTime next) {
        // Boundaries strictly below `next` are complete; events at `next`
        // have not executed yet and belong to the following interval.
        emit_samples_up_to(next.us);
    });
}

void Simulation::emit_samples_up_to(std::uint64_t t_us) {
    std::uint64_t interval = net_.scenario().assessment.metrics_interval_us;
    while (next_sample_at_ < t_us) {
        sample_at(next_sample_at_);
        next_sample_at_ += interval;
    }
}

void Simulation::sample_at(std::uint64_t t_us) {
    for (std::size_t i = 0; i < net_.node_count(); ++i) {
        const NodeRuntime& rt = net_.node_runtime(i);
        Snapshot& prev = last_sample_[i];
        const std::string& id = net_.node(i).id;
        auto push = [&](report::MetricSeries series, double value) {
            samples_.push_back({t_us, id, series, value});
        };
        push(report::MetricSeries::Sent, static_cast<double>(rt.sent - prev.sent));
        push(report::MetricSeries::Received, static_cast<double>(rt.received - prev.received));
        push(report::MetricSeries::Dropped, static_cast<double>(rt.dropped - prev.dropped));
        push(report::MetricSeries::EnergyMj,
             static_cast<double>(rt.energy_nj - prev.energy_nj) / 1e6);
        prev = {rt.sent, rt.received, rt.dropped, rt.energy_nj};
    }
}

void Simulation::setup_attacks() {
    const auto& attacks = net_.installed_attacks();
    for (std::size_t i = 0; i < attacks.size(); ++i) {
        const attack::AttackConfig& a = attacks[i];
        if (a.kind != attack::AttackKind::Sinkhole) continue;
        nlohmann::json data{{"attack", i}, {"op", "sinkhole-activate"}};
        kernel_.schedule(sim::SimTime{a.start_us}, sim::EventKind::Timer, a.target,
                         std::move(data), [this, i](sim::Kernel&, sim::Event& ev) {
                             attack::sinkhole_activate(net_, i);
                             ev.data["routing_generation"] = net_.routing_generation();
                         });
        if (a.end_us == std::numeric_limits<std::uint64_t>::max()) continue;
        nlohmann::json end{{"attack", i}, {"op", "sinkhole-deactivate"}};
        kernel_.schedule(sim::SimTime{a.end_us}, sim::EventKind::Timer, a.target, std::move(end),
                         [this, i](sim::Kernel&, sim::Event& ev) {
                             attack::sinkhole_deactivate(net_, i);
                             ev.data["routing_generation"] = net_.routing_generation();
                         });
    }
}

void Simulation::schedule_sweep() {
    const AssessmentConfig& cfg = net_.scenario().assessment;
    if (!cfg.probe_origin || cfg.sweep_ranges.empty()) return;
    schedule_sweep(*cfg.probe_origin, cfg.sweep_ranges, cfg.probe_interval_us);
}

void Simulation::schedule_sweep(const std::string& probe_origin, const std::vector<Cidr>& ranges,
                                std::uint64_t probe_interval_us) {
    std::size_t origin = net_.index_of(probe_origin);
    // One probe per in-range address, paced on the virtual clock.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < net_.node_count(); ++i) {
        Ipv4 addr = net_.node(i).addr;
        if (std::any_of(ranges.begin(), ranges.end(),
                        [&](const Cidr& r) { return r.contains(addr); }))
            candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(), [this](std::size_t a, std::size_t b) {
        return net_.node(a).addr < net_.node(b).addr;
    });
    sim::SimTime base = kernel_.now();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        std::size_t target = candidates[k];
        sim::SimTime at = base + k * probe_interval_us;
        nlohmann::json data{{"addr", net_.node(target).addr.str()}};
        kernel_.schedule(
            at, sim::EventKind::Probe, net_.node(origin).id, std::move(data),
            [this, origin, target](sim::Kernel& kernel, sim::Event& ev) {
                const NodeSpec& spec = net_.node(target);
                if (!spec.responds_to_ping || !net_.reachable(origin, target)) {
                    ev.data["outcome"] = "no-reply";
                    return;
                }
                // Probes are deterministic: immune to link loss and attack
                // behavior, so discovery never perturbs flow statistics.
                std::vector<std::size_t> path{origin};
                std::uint64_t rtt = 0;
                for (std::size_t u = origin; u != target;) {
                    std::size_t next = *net_.next_hop(u, target);
                    rtt += 2 * net_.link(*net_.link_between(u, next)).latency_us;
                    path.push_back(next);
                    u = next;
                }
                ev.data["outcome"] = "reply-scheduled";
                nlohmann::json reply{{"addr", spec.addr.str()}, {"from", spec.id}};
                kernel.schedule(
                    kernel.now() + rtt, sim::EventKind::Probe, net_.node(origin).id,
                    std::move(reply), [this, path, target](sim::Kernel&, sim::Event& ev2) {
                        const AssessmentConfig& cfg = net_.scenario().assessment;
                        for (std::size_t u : path) {
                            net_.charge_energy(u, cfg);  // outbound
                            net_.charge_energy(u, cfg);  // reply
                        }
                        const NodeSpec& spec = net_.node(target);
                        discovered_.push_back({spec.id, spec.addr, spec.mac, spec.os, spec.medium,
                                               spec.node_class});
                        ev2.data["outcome"] = "recorded";
                    });
            });
    }
}

void Simulation::emit_traffic(std::size_t flow_index) {
    const FlowSpec& f = net_.scenario().flows[flow_index];
    std::size_t src = net_.index_of(f.src);
    std::size_t dst = net_.index_of(f.dst);
    if (!net_.reachable(src, dst))
        throw UnreachableError("flow \"" + f.src + "\" -> \"" + f.dst + "\" has no route");
    for (std::uint64_t k = 0; k < f.packets; ++k) {
        nlohmann::json data{{"flow", flow_index}, {"seq", k}};
        kernel_.schedule(sim::SimTime{f.start_us + k * f.interval_us},
                         sim::EventKind::TrafficEmit, f.src, std::move(data),
                         [this, flow_index, src, k](sim::Kernel&, sim::Event& ev) {
                             FlowStats& fs = net_.flow_stats(flow_index);
                             ++fs.pt;
                             ++fs.in_flight;
                             ++net_.node_runtime(src).sent;
                             step_packet({flow_index, k}, src, ev);
                         });
    }
}

void Simulation::schedule_flows() {
    for (std::size_t i = 0; i < net_.scenario().flows.size(); ++i) emit_traffic(i);
}

void Simulation::step_packet(PacketRef packet, std::size_t at, sim::Event& ev) {
    ForwardDecision decision =
        forward(net_, net_.scenario().assessment, packet, at, kernel_.now());
    if (std::holds_alternative<Deliver>(decision)) {
        ev.data["outcome"] = "deliver";
        return;
    }
    if (const Drop* drop = std::get_if<Drop>(&decision)) {
        ev.data["outcome"] = "drop";
        ev.data["reason"] = std::string(to_string(drop->reason));
        return;
    }
    const NextHop& nh = std::get<NextHop>(decision);
    const std::string& next_id = net_.node(nh.node).id;
    ev.data["outcome"] = "forward";
    ev.data["next"] = next_id;
    nlohmann::json data{{"flow", packet.flow}, {"seq", packet.seq}};
    std::size_t next_index = nh.node;
    kernel_.schedule(kernel_.now() + nh.latency_us, sim::EventKind::PacketArrival, next_id,
                     std::move(data), [this, packet, next_index](sim::Kernel&, sim::Event& ev2) {
                         step_packet(packet, next_index, ev2);
                     });
}

sim::KernelStats Simulation::run(sim::SimTime until) {
    sim::KernelStats stats = kernel_.run(until);
    std::uint64_t clock = stats.clock.us;
    std::uint64_t interval = net_.scenario().assessment.metrics_interval_us;
    while (next_sample_at_ <= clock) {
        sample_at(next_sample_at_);
        next_sample_at_ += interval;
    }
    // Partial tail interval: emitted only when something happened in it.
    std::uint64_t last_boundary = next_sample_at_ - interval;
    if (clock > last_boundary || next_sample_at_ == interval) {
        bool residual = false;
        for (std::size_t i = 0; i < net_.node_count() && !residual; ++i) {
            const NodeRuntime& rt = net_.node_runtime(i);
            const Snapshot& prev = last_sample_[i];
            residual = rt.sent != prev.sent || rt.received != prev.received ||
                       rt.dropped != prev.dropped || rt.energy_nj != prev.energy_nj;
        }
        if (residual) sample_at(clock);
    }
    return stats;
}

std::vector<discovery::AssetRecord> Simulation::discovered() const {
    std::vector<discovery::AssetRecord> out = discovered_;
    std::sort(out.begin(), out.end(),
              [](const discovery::AssetRecord& a, const discovery::AssetRecord& b) {
                  return a.addr < b.addr;
              });
    return out;
}

}  // namespace aras::net
