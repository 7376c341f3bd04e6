#include "aras/config.hpp"

namespace aras {

std::vector<ImpactArea> default_impact_areas() {
    // ICS ordering: people first, then keeping the plant running.
    return {
        {"safety", 5}, {"availability", 4}, {"productivity", 3}, {"reputation", 2}, {"financial", 1},
    };
}

const std::map<net::NodeClass, ProfileDefaults>& builtin_class_defaults() {
    using net::NodeClass;
    using R = SecurityRequirement;
    static const std::map<NodeClass, ProfileDefaults> defaults = {
        {NodeClass::ItHost,
         {"it-operations", Level::Med, {R::Confidentiality, R::Integrity, R::Availability},
          R::Confidentiality}},
        {NodeClass::IiotSensor,
         {"ot-operations", Level::Low, {R::Integrity, R::Availability}, R::Integrity}},
        {NodeClass::Gateway,
         {"network-team", Level::Med, {R::Integrity, R::Availability}, R::Availability}},
        {NodeClass::Plc,
         {"ot-operations", Level::High, {R::Integrity, R::Availability}, R::Availability}},
        {NodeClass::ScadaServer,
         {"ot-operations", Level::High, {R::Confidentiality, R::Integrity, R::Availability},
          R::Availability}},
        {NodeClass::Switch,
         {"network-team", Level::Low, {R::Availability}, R::Availability}},
        {NodeClass::Router,
         {"network-team", Level::Med, {R::Availability}, R::Availability}},
    };
    return defaults;
}

double energy_mj_for(const AssessmentConfig& cfg, net::NodeClass cls) {
    auto it = cfg.energy_mj_per_packet.find(cls);
    if (it != cfg.energy_mj_per_packet.end()) return it->second;
    switch (cls) {
        case net::NodeClass::IiotSensor: return 0.05;
        case net::NodeClass::Gateway: return 0.02;
        default: return 0.01;
    }
}

}  // namespace aras
