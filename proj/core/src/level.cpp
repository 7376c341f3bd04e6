#include "aras/level.hpp"

#include "aras/errors.hpp"

namespace aras {

int level_value(Level l) { return static_cast<int>(l); }

std::string_view to_string(Level l) {
    switch (l) {
        case Level::Low: return "low";
        case Level::Med: return "med";
        default: return "high";
    }
}

Level level_from_string(std::string_view s) {
    if (s == "low") return Level::Low;
    if (s == "med") return Level::Med;
    if (s == "high") return Level::High;
    throw ParseError("unknown level \"" + std::string(s) + "\" (expected low|med|high)");
}

std::string_view to_string(SecurityRequirement r) {
    switch (r) {
        case SecurityRequirement::Confidentiality: return "confidentiality";
        case SecurityRequirement::Integrity: return "integrity";
        default: return "availability";
    }
}

SecurityRequirement security_requirement_from_string(std::string_view s) {
    if (s == "confidentiality") return SecurityRequirement::Confidentiality;
    if (s == "integrity") return SecurityRequirement::Integrity;
    if (s == "availability") return SecurityRequirement::Availability;
    throw ParseError("unknown security requirement \"" + std::string(s) + "\"");
}

}  // namespace aras
