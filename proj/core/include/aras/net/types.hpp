#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aras/addr.hpp"
#include "aras/level.hpp"
#include "aras/version.hpp"

namespace aras::net {

enum class NodeClass { ItHost, IiotSensor, Gateway, Plc, ScadaServer, Switch, Router };
enum class Medium { Wired, Wireless };
enum class LinkClass { Ethernet, Wifi, Lora, Fieldbus };

std::string_view to_string(NodeClass c);
NodeClass node_class_from_string(std::string_view s);
std::string_view to_string(Medium m);
Medium medium_from_string(std::string_view s);
std::string_view to_string(LinkClass c);
LinkClass link_class_from_string(std::string_view s);

struct SoftwareItem {
    std::string product;
    Version version;
};

struct NodeSpec {
    std::string id;
    Ipv4 addr;
    Mac mac;
    NodeClass node_class = NodeClass::ItHost;
    std::string os;
    Medium medium = Medium::Wired;
    bool responds_to_ping = true;
    std::vector<SoftwareItem> software;
    Level data_sensitivity = Level::Low;
};

struct LinkSpec {
    std::string a;
    std::string b;
    std::uint64_t latency_us = 1000;
    double loss_prob = 0.0;
    std::uint64_t cost = 1;
    LinkClass link_class = LinkClass::Ethernet;
};

struct FlowSpec {
    std::string src;
    std::string dst;
    std::uint64_t packets = 1;
    std::uint64_t interval_us = 1000;
    std::uint64_t start_us = 0;
};

}  // namespace aras::net
