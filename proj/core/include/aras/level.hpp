#pragma once

#include <string>
#include <string_view>

namespace aras {

// Three-tier qualitative scale shared by sensitivity, asset value, severity,
// probability and impact. Numeric values are the worksheet multipliers.
enum class Level { Low = 1, Med = 2, High = 3 };

int level_value(Level l);
std::string_view to_string(Level l);
Level level_from_string(std::string_view s);  // throws ParseError on unknown token

enum class SecurityRequirement { Confidentiality, Integrity, Availability };

std::string_view to_string(SecurityRequirement r);
SecurityRequirement security_requirement_from_string(std::string_view s);

}  // namespace aras
