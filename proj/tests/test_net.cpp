#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aras/errors.hpp"
#include "aras/net/network.hpp"
#include "aras/net/scenario.hpp"
#include "aras/net/simulation.hpp"
#include "aras/report/health.hpp"
#include "aras/report/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace aras;
using testutil::flow;
using testutil::link;
using testutil::node;

using testutil::random_graph;

TEST_SUITE("scenario") {

TEST_CASE("minimal document round-trips") {
    net::Scenario s = net::load_scenario(R"({
        "name": "tiny",
        "nodes": [{"id": "a", "addr": "10.0.0.1", "class": "it-host"}]
    })");
    CHECK(s.name == "tiny");
    CHECK(s.master_seed == 0);
    REQUIRE(s.nodes.size() == 1);
    CHECK(s.nodes[0].mac.value == Mac::from_ipv4(s.nodes[0].addr).value);
    CHECK(s.nodes[0].responds_to_ping);
}

TEST_CASE("unknown top-level keys are rejected") {
    CHECK_THROWS_AS(net::load_scenario(R"({
        "name": "x",
        "nodes": [{"id": "a", "addr": "10.0.0.1", "class": "it-host"}],
        "extra": 1
    })"),
                    ValidationError);
}

TEST_CASE("duplicate node ids are rejected with a path") {
    try {
        net::load_scenario(R"({
            "name": "x",
            "nodes": [
                {"id": "a", "addr": "10.0.0.1", "class": "it-host"},
                {"id": "a", "addr": "10.0.0.2", "class": "it-host"}
            ]
        })");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("nodes[1].id") != std::string::npos);
    }
}

TEST_CASE("links to unknown nodes are rejected") {
    CHECK_THROWS_AS(net::load_scenario(R"({
        "name": "x",
        "nodes": [{"id": "a", "addr": "10.0.0.1", "class": "it-host"}],
        "links": [{"a": "a", "b": "ghost"}]
    })"),
                    ValidationError);
}

TEST_CASE("loss probability outside the unit interval is rejected") {
    CHECK_THROWS_AS(net::load_scenario(R"({
        "name": "x",
        "nodes": [
            {"id": "a", "addr": "10.0.0.1", "class": "it-host"},
            {"id": "b", "addr": "10.0.0.2", "class": "it-host"}
        ],
        "links": [{"a": "a", "b": "b", "loss_prob": 1.5}]
    })"),
                    ValidationError);
}

TEST_CASE("attack kinds constrain their parameters") {
    const char* sinkhole_with_drop = R"({
        "name": "x",
        "nodes": [
            {"id": "a", "addr": "10.0.0.1", "class": "it-host"},
            {"id": "b", "addr": "10.0.0.2", "class": "it-host"}
        ],
        "links": [{"a": "a", "b": "b"}],
        "attacks": [{"kind": "sinkhole", "target": "b", "advertised_cost": 1, "drop_prob": 0.5}]
    })";
    CHECK_THROWS_AS(net::load_scenario(sinkhole_with_drop), ValidationError);

    const char* dropping_without_prob = R"({
        "name": "x",
        "nodes": [
            {"id": "a", "addr": "10.0.0.1", "class": "it-host"},
            {"id": "b", "addr": "10.0.0.2", "class": "it-host"}
        ],
        "links": [{"a": "a", "b": "b"}],
        "attacks": [{"kind": "ip-dropping", "target": "b"}]
    })";
    CHECK_THROWS_AS(net::load_scenario(dropping_without_prob), ValidationError);
}

TEST_CASE("attack window must be ordered") {
    CHECK_THROWS_AS(net::load_scenario(R"({
        "name": "x",
        "nodes": [
            {"id": "a", "addr": "10.0.0.1", "class": "it-host"},
            {"id": "b", "addr": "10.0.0.2", "class": "it-host"}
        ],
        "links": [{"a": "a", "b": "b"}],
        "attacks": [{"kind": "ip-dropping", "target": "b", "drop_prob": 1.0,
                     "start_us": 100, "end_us": 100}]
    })"),
                    ValidationError);
}

TEST_CASE("malformed JSON raises ParseError") {
    CHECK_THROWS_AS(net::load_scenario("{"), ParseError);
}

TEST_CASE("missing scenario file raises IoError") {
    CHECK_THROWS_AS(net::load_scenario_file("/nonexistent/path.json"), IoError);
}

}  // TEST_SUITE scenario

TEST_SUITE("routing") {

TEST_CASE("route matches exhaustive enumeration on random graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        net::Scenario s = random_graph(rng, 12);
        net::NetworkState net(s);
        for (const net::NodeSpec& a : s.nodes)
            for (const net::NodeSpec& b : s.nodes) {
                if (a.id == b.id) continue;
                auto expected = oracle::shortest_path(s, a.id, b.id);
                REQUIRE(expected.has_value());
                std::vector<std::string> got = net::route(net, a.id, b.id);
                std::uint64_t got_cost = 0;
                for (std::size_t i = 0; i + 1 < got.size(); ++i) {
                    auto li = net.link_between(net.index_of(got[i]), net.index_of(got[i + 1]));
                    REQUIRE(li.has_value());
                    got_cost += s.links[*li].cost;
                }
                CHECK(got_cost == expected->cost);
                CHECK(got == expected->path);
                CHECK(net.distance(net.index_of(a.id), net.index_of(b.id)) == expected->cost);
            }
    }
}

TEST_CASE("articulation points match the node-removal oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        net::Scenario s = random_graph(rng, 12);
        net::NetworkState net(s);
        report::HealthReport health = report::network_health(net);
        CHECK(health.articulation_points == oracle::articulation_points(s));
    }
}

TEST_CASE("unreachable destinations throw") {
    net::Scenario s;
    s.name = "split";
    s.nodes = {node("a", "10.0.0.1"), node("b", "10.0.0.2"), node("c", "10.0.0.3"),
               node("d", "10.0.0.4")};
    s.links = {testutil::link("a", "b"), testutil::link("c", "d")};
    net::NetworkState net(s);
    CHECK_THROWS_AS(net::route(net, "a", "c"), UnreachableError);
    CHECK_FALSE(net.reachable(net.index_of("a"), net.index_of("c")));
    CHECK(net.reachable(net.index_of("a"), net.index_of("b")));
}

TEST_CASE("routing to self is the trivial path") {
    net::Scenario s = testutil::line_scenario(1);
    net::NetworkState net(s);
    CHECK(net::route(net, "h1", "h1") == std::vector<std::string>{"h1"});
}

}  // TEST_SUITE routing

TEST_SUITE("traffic") {

TEST_CASE("lossless line delivers everything") {
    net::Scenario s = testutil::line_scenario(1000);
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    const net::FlowStats& st = net.all_flow_stats()[0];
    CHECK(st.pt == 1000);
    CHECK(st.pd == 1000);
    CHECK(st.pl == 0);
    CHECK(st.in_flight == 0);
    CHECK(report::pdr(st) == doctest::Approx(1.0));
    CHECK(report::dr(st) == doctest::Approx(0.0));
}

TEST_CASE("pdr and dr always sum to one and counters conserve") {
    std::mt19937 pick(5);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        std::uniform_real_distribution<double> loss(0.0, 0.4);
        net::Scenario s = testutil::line_scenario(2000, loss(pick), seed);
        net::NetworkState net(s);
        net::Simulation sim(net);
        sim.schedule_flows();
        sim.run();
        const net::FlowStats& st = net.all_flow_stats()[0];
        CHECK(st.pt == st.pd + st.pl + st.in_flight);
        CHECK(st.in_flight == 0);
        CHECK(report::pdr(st) + report::dr(st) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("chained lossy links multiply through") {
    // Two links at 10% loss each: delivery expectation 0.81. The band is
    // 4 sigma of Binomial(10^4, 0.81).
    net::Scenario s = testutil::line_scenario(10000, 0.1, 77);
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    double pdr = report::pdr(net.all_flow_stats()[0]);
    CHECK(pdr > 0.79);
    CHECK(pdr < 0.83);
}

TEST_CASE("zero transmitted packets make the ratios undefined") {
    CHECK_THROWS_AS(report::pdr(net::FlowStats{}), ZeroTransmittedError);
    CHECK_THROWS_AS(report::dr(net::FlowStats{}), ZeroTransmittedError);
    net::Scenario s = testutil::line_scenario(1);
    net::NetworkState net(s);
    std::vector<report::FlowSummary> flows = report::summarize_flows(net);
    REQUIRE(flows.size() == 1);
    CHECK_FALSE(flows[0].pdr.has_value());
    CHECK_FALSE(flows[0].dr.has_value());
}

TEST_CASE("per-packet energy accrues at every node on the path") {
    net::Scenario s = testutil::line_scenario(100);
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    // Defaults: gateway 0.02 mJ, everything else here 0.01 mJ.
    CHECK(net.node_runtime(net.index_of("h1")).energy_nj == 100 * 10000);
    CHECK(net.node_runtime(net.index_of("mid")).energy_nj == 100 * 20000);
    CHECK(net.node_runtime(net.index_of("h3")).energy_nj == 100 * 10000);
}

TEST_CASE("energy costs can be overridden per class") {
    net::Scenario s = testutil::line_scenario(10);
    s.assessment.energy_mj_per_packet[net::NodeClass::Gateway] = 0.5;
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    CHECK(net.node_runtime(net.index_of("mid")).energy_nj == 10 * 500000);
}

TEST_CASE("emitting an unreachable flow throws") {
    net::Scenario s;
    s.name = "split";
    s.nodes = {node("a", "10.0.0.1"), node("b", "10.0.0.2")};
    s.flows = {flow("a", "b", 10)};
    net::NetworkState net(s);
    net::Simulation sim(net);
    CHECK_THROWS_AS(sim.emit_traffic(0), UnreachableError);
}

TEST_CASE("link packet counters see traffic in both directions") {
    net::Scenario s = testutil::line_scenario(50);
    s.flows.push_back(flow("h3", "h1", 30, 100));
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    CHECK(net.links()[0].packets == 80);
    CHECK(net.links()[1].packets == 80);
}

}  // TEST_SUITE traffic

TEST_SUITE("metrics-sampling") {

TEST_CASE("interval samples cover the run and deltas add up") {
    net::Scenario s = testutil::line_scenario(1000);
    s.assessment.metrics_interval_us = 10000;
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();

    const auto& samples = sim.metric_samples();
    REQUIRE_FALSE(samples.empty());
    double sent_total = 0.0;
    std::uint64_t last_t = 0;
    for (const report::MetricSample& m : samples) {
        CHECK(m.t_us >= last_t);
        last_t = m.t_us;
        if (m.node == "h1" && m.series == report::MetricSeries::Sent) sent_total += m.value;
    }
    CHECK(sent_total == doctest::Approx(1000.0));
}

TEST_CASE("boundary samples land on interval multiples except a final partial") {
    net::Scenario s = testutil::line_scenario(105, 0.0, 3);
    s.assessment.metrics_interval_us = 10000;
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    std::uint64_t clock = sim.kernel().now().us;
    for (const report::MetricSample& m : sim.metric_samples()) {
        bool on_boundary = m.t_us % 10000 == 0;
        bool tail = m.t_us == clock;
        CHECK((on_boundary || tail));
    }
}

TEST_CASE("each sampled instant carries all four series per node") {
    net::Scenario s = testutil::line_scenario(200);
    s.assessment.metrics_interval_us = 5000;
    net::NetworkState net(s);
    net::Simulation sim(net);
    sim.schedule_flows();
    sim.run();
    std::map<std::uint64_t, std::map<std::string, int>> by_instant;
    for (const report::MetricSample& m : sim.metric_samples())
        by_instant[m.t_us][m.node]++;
    for (const auto& [t, nodes] : by_instant)
        for (const auto& [id, count] : nodes) CHECK(count == 4);
}

}  // TEST_SUITE metrics-sampling
