#include "aras/net/types.hpp"

#include "aras/errors.hpp"

namespace aras::net {

std::string_view to_string(NodeClass c) {
    switch (c) {
        case NodeClass::ItHost: return "it-host";
        case NodeClass::IiotSensor: return "iiot-sensor";
        case NodeClass::Gateway: return "gateway";
        case NodeClass::Plc: return "plc";
        case NodeClass::ScadaServer: return "scada-server";
        case NodeClass::Switch: return "switch";
        default: return "router";
    }
}

NodeClass node_class_from_string(std::string_view s) {
    if (s == "it-host") return NodeClass::ItHost;
    if (s == "iiot-sensor") return NodeClass::IiotSensor;
    if (s == "gateway") return NodeClass::Gateway;
    if (s == "plc") return NodeClass::Plc;
    if (s == "scada-server") return NodeClass::ScadaServer;
    if (s == "switch") return NodeClass::Switch;
    if (s == "router") return NodeClass::Router;
    throw ParseError("unknown node class \"" + std::string(s) + "\"");
}

std::string_view to_string(Medium m) { return m == Medium::Wired ? "wired" : "wireless"; }

Medium medium_from_string(std::string_view s) {
    if (s == "wired") return Medium::Wired;
    if (s == "wireless") return Medium::Wireless;
    throw ParseError("unknown medium \"" + std::string(s) + "\"");
}

std::string_view to_string(LinkClass c) {
    switch (c) {
        case LinkClass::Ethernet: return "ethernet";
        case LinkClass::Wifi: return "wifi";
        case LinkClass::Lora: return "lora";
        default: return "fieldbus";
    }
}

LinkClass link_class_from_string(std::string_view s) {
    if (s == "ethernet") return LinkClass::Ethernet;
    if (s == "wifi") return LinkClass::Wifi;
    if (s == "lora") return LinkClass::Lora;
    if (s == "fieldbus") return LinkClass::Fieldbus;
    throw ParseError("unknown link class \"" + std::string(s) + "\"");
}

}  // namespace aras::net
