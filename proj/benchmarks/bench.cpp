// Throughput numbers for the hot paths: event dispatch, routing
// recomputation, packet forwarding with and without an active attack,
// discovery sweeps, risk scoring and anomaly detection.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aras/attack/attack.hpp"
#include "aras/discovery/discovery.hpp"
#include "aras/net/network.hpp"
#include "aras/net/scenario.hpp"
#include "aras/net/simulation.hpp"
#include "aras/report/anomaly.hpp"
#include "aras/risk/risk.hpp"
#include "aras/sim/kernel.hpp"

using namespace aras;

namespace {

net::NodeSpec make_node(const std::string& id, std::uint32_t host) {
    net::NodeSpec n;
    n.id = id;
    n.addr = Ipv4{(10u << 24) | (77u << 16) | ((host / 250) << 8) | (host % 250 + 1)};
    n.mac = Mac::from_ipv4(n.addr);
    return n;
}

net::LinkSpec make_link(const std::string& a, const std::string& b, std::uint64_t cost,
                        double loss = 0.0) {
    net::LinkSpec l;
    l.a = a;
    l.b = b;
    l.latency_us = 100;
    l.loss_prob = loss;
    l.cost = cost;
    return l;
}

// Ring plus skip chords: connected, cyclic, non-trivial shortest paths.
net::Scenario ring_scenario(std::size_t n) {
    net::Scenario s;
    s.name = "ring";
    s.master_seed = 17;
    for (std::size_t i = 0; i < n; ++i)
        s.nodes.push_back(make_node("n" + std::to_string(i), static_cast<std::uint32_t>(i)));
    for (std::size_t i = 0; i < n; ++i)
        s.links.push_back(make_link(s.nodes[i].id, s.nodes[(i + 1) % n].id, 1 + i % 7));
    for (std::size_t i = 0; i + 5 < n; i += 5)
        s.links.push_back(make_link(s.nodes[i].id, s.nodes[i + 5].id, 2 + i % 5));
    return s;
}

net::Scenario relay_scenario(std::uint64_t packets, double loss) {
    net::Scenario s;
    s.name = "relay";
    s.master_seed = 5;
    s.nodes = {make_node("src", 0), make_node("relay", 1), make_node("dst", 2)};
    s.links = {make_link("src", "relay", 1, loss), make_link("relay", "dst", 1, loss)};
    net::FlowSpec f;
    f.src = "src";
    f.dst = "dst";
    f.packets = packets;
    f.interval_us = 10;
    s.flows = {f};
    return s;
}

void BM_KernelDispatch(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        sim::Kernel k;
        std::uint64_t sum = 0;
        for (std::int64_t i = 0; i < n; ++i)
            k.schedule(sim::SimTime{static_cast<std::uint64_t>(i)}, sim::EventKind::Timer,
                       "x", {}, [&sum](sim::Kernel&, sim::Event& ev) { sum += ev.time.us; });
        k.run();
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_KernelDispatch)->Arg(1000)->Arg(10000);

void BM_RoutingRecompute(benchmark::State& state) {
    net::NetworkState net(ring_scenario(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        net.recompute_routing();
        benchmark::DoNotOptimize(net.routing_generation());
    }
}
BENCHMARK(BM_RoutingRecompute)->Arg(16)->Arg(64)->Arg(256);

void BM_CleanForwarding(benchmark::State& state) {
    const std::uint64_t packets = 2000;
    for (auto _ : state) {
        net::NetworkState net(relay_scenario(packets, 0.0));
        net::Simulation sim(net);
        sim.schedule_flows();
        sim.run();
        benchmark::DoNotOptimize(net.all_flow_stats()[0].pd);
    }
    state.SetItemsProcessed(state.iterations() * packets);
}
BENCHMARK(BM_CleanForwarding);

void BM_LossyForwarding(benchmark::State& state) {
    const std::uint64_t packets = 2000;
    for (auto _ : state) {
        net::NetworkState net(relay_scenario(packets, 0.1));
        net::Simulation sim(net);
        sim.schedule_flows();
        sim.run();
        benchmark::DoNotOptimize(net.all_flow_stats()[0].pd);
    }
    state.SetItemsProcessed(state.iterations() * packets);
}
BENCHMARK(BM_LossyForwarding);

void BM_BlackholeForwarding(benchmark::State& state) {
    const std::uint64_t packets = 2000;
    net::Scenario s = relay_scenario(packets, 0.0);
    attack::AttackConfig a;
    a.kind = attack::AttackKind::IpDropping;
    a.target = "relay";
    a.drop_prob = 0.5;
    s.attacks = {a};
    for (auto _ : state) {
        net::NetworkState net(s);
        attack::apply_attacks(net, s.attacks);
        net::Simulation sim(net);
        sim.setup_attacks();
        sim.schedule_flows();
        sim.run();
        benchmark::DoNotOptimize(net.all_flow_stats()[0].pd);
    }
    state.SetItemsProcessed(state.iterations() * packets);
}
BENCHMARK(BM_BlackholeForwarding);

void BM_PingSweep(benchmark::State& state) {
    net::Scenario s = ring_scenario(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        net::NetworkState net(s);
        std::vector<discovery::AssetRecord> found =
            discovery::ping_sweep(net, "n0", Cidr::parse("10.77.0.0/16"), 100);
        benchmark::DoNotOptimize(found.size());
    }
}
BENCHMARK(BM_PingSweep)->Arg(30)->Arg(120);

void BM_RiskRegister(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    risk::RiskCriteria criteria = risk::define_criteria(default_impact_areas());
    AssessmentConfig cfg;
    std::vector<risk::ThreatScenario> threats;
    for (std::int64_t i = 0; i < n; ++i) {
        risk::ThreatScenario t;
        t.id = "TS-" + std::to_string(i);
        t.asset = "asset" + std::to_string(i % 7);
        t.threat_name = "threat" + std::to_string(i % 11);
        t.source = i % 3 == 0 ? risk::ThreatSource::Simulation : risk::ThreatSource::Kb;
        if (t.source == risk::ThreatSource::Simulation)
            t.evidence = risk::Evidence{"a->b", 0.2, 0.8};
        t.exploit_available = i % 4 == 0;
        for (const ImpactArea& area : criteria.areas)
            t.impacts[area.name] = static_cast<Level>(1 + (i + area.rank) % 3);
        threats.push_back(t);
    }
    for (auto _ : state) {
        std::vector<risk::RiskEntry> reg = risk::build_risk_register(threats, criteria, cfg);
        benchmark::DoNotOptimize(reg.size());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RiskRegister)->Arg(100)->Arg(1000);

void BM_AnomalyDetect(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    std::vector<report::MetricSample> series;
    for (std::int64_t i = 0; i < n; ++i) {
        double v = 100.0 + (i % 13) - 6.0 + (i % 97 == 0 ? 80.0 : 0.0);
        series.push_back({static_cast<std::uint64_t>(i + 1) * 1000, "n0",
                          report::MetricSeries::Received, v});
    }
    for (auto _ : state) {
        std::vector<report::AnomalyFlag> flags =
            report::detect_anomalies(series, 20, 3.0, 170.0);
        benchmark::DoNotOptimize(flags.size());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_AnomalyDetect)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
