#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aras {

// Dotted-integer software version, e.g. "2.3" or "1.0.17".
// Comparison is componentwise with missing components treated as zero,
// so "2.3" == "2.3.0" and "2.3" < "2.10".
struct Version {
    std::vector<std::uint32_t> parts;

    static Version parse(std::string_view text);  // throws ParseError

    std::string str() const;

    std::strong_ordering operator<=>(const Version& other) const;
    bool operator==(const Version& other) const { return (*this <=> other) == 0; }
};

}  // namespace aras
