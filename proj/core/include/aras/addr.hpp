#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace aras {

struct Ipv4 {
    std::uint32_t value = 0;  // host byte order

    static Ipv4 parse(std::string_view text);  // throws ParseError
    std::string str() const;

    auto operator<=>(const Ipv4&) const = default;
};

struct Mac {
    std::uint64_t value = 0;  // low 48 bits

    static Mac parse(std::string_view text);  // throws ParseError, "aa:bb:cc:dd:ee:ff"
    // Locally administered address derived from an IPv4 address; used when a
    // scenario omits the mac field.
    static Mac from_ipv4(Ipv4 addr);
    std::string str() const;

    auto operator<=>(const Mac&) const = default;
};

// CIDR block, e.g. "10.0.0.0/24". prefix 0 matches everything.
struct Cidr {
    Ipv4 base;
    int prefix = 32;

    static Cidr parse(std::string_view text);  // throws ParseError
    bool contains(Ipv4 addr) const;
    std::string str() const;
};

}  // namespace aras
