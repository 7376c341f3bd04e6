#include "aras/addr.hpp"

#include <charconv>

#include "aras/errors.hpp"

namespace aras {

namespace {

std::uint32_t parse_decimal_octet(std::string_view part, std::string_view whole) {
    std::uint32_t value = 0;
    const char* last = part.data() + part.size();
    auto [p, ec] = std::from_chars(part.data(), last, value);
    if (ec != std::errc() || p != last || part.empty() || value > 255)
        throw ParseError("bad IPv4 address \"" + std::string(whole) + "\"");
    return value;
}

}  // namespace

Ipv4 Ipv4::parse(std::string_view text) {
    std::uint32_t value = 0;
    std::size_t pos = 0;
    for (int octet = 0; octet < 4; ++octet) {
        std::size_t dot = text.find('.', pos);
        bool last_octet = octet == 3;
        if (last_octet != (dot == std::string_view::npos))
            throw ParseError("bad IPv4 address \"" + std::string(text) + "\"");
        std::string_view part =
            text.substr(pos, last_octet ? std::string_view::npos : dot - pos);
        value = (value << 8) | parse_decimal_octet(part, text);
        pos = dot + 1;
    }
    return Ipv4{value};
}

std::string Ipv4::str() const {
    std::string out;
    for (int shift = 24; shift >= 0; shift -= 8) {
        if (!out.empty()) out += '.';
        out += std::to_string((value >> shift) & 0xff);
    }
    return out;
}

Mac Mac::parse(std::string_view text) {
    if (text.size() != 17) throw ParseError("bad MAC address \"" + std::string(text) + "\"");
    std::uint64_t value = 0;
    for (int group = 0; group < 6; ++group) {
        std::size_t pos = static_cast<std::size_t>(group) * 3;
        if (group && text[pos - 1] != ':')
            throw ParseError("bad MAC address \"" + std::string(text) + "\"");
        std::uint32_t byte = 0;
        const char* first = text.data() + pos;
        auto [p, ec] = std::from_chars(first, first + 2, byte, 16);
        if (ec != std::errc() || p != first + 2)
            throw ParseError("bad MAC address \"" + std::string(text) + "\"");
        value = (value << 8) | byte;
    }
    return Mac{value};
}

Mac Mac::from_ipv4(Ipv4 addr) {
    // 02:00:5e is a locally administered prefix; the low 32 bits carry the
    // IPv4 address so derived MACs stay unique whenever addresses are.
    return Mac{(0x02005eull << 32) | addr.value};
}

std::string Mac::str() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (int shift = 40; shift >= 0; shift -= 8) {
        if (!out.empty()) out += ':';
        unsigned byte = (value >> shift) & 0xff;
        out += digits[byte >> 4];
        out += digits[byte & 0xf];
    }
    return out;
}

Cidr Cidr::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("bad CIDR \"" + std::string(text) + "\" (expected addr/prefix)");
    Cidr c;
    c.base = Ipv4::parse(text.substr(0, slash));
    std::string_view pfx = text.substr(slash + 1);
    int prefix = -1;
    const char* last = pfx.data() + pfx.size();
    auto [p, ec] = std::from_chars(pfx.data(), last, prefix);
    if (ec != std::errc() || p != last || pfx.empty() || prefix < 0 || prefix > 32)
        throw ParseError("bad CIDR prefix in \"" + std::string(text) + "\"");
    c.prefix = prefix;
    return c;
}

bool Cidr::contains(Ipv4 addr) const {
    if (prefix == 0) return true;
    std::uint32_t mask = prefix == 32 ? ~0u : ~((1u << (32 - prefix)) - 1);
    return (addr.value & mask) == (base.value & mask);
}

std::string Cidr::str() const { return base.str() + "/" + std::to_string(prefix); }

}  // namespace aras
