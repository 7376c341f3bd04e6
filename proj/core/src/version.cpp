#include "aras/version.hpp"

#include <algorithm>
#include <charconv>

#include "aras/errors.hpp"

namespace aras {

Version Version::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty version string");
    Version v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string_view part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos
                                                                               : dot - pos);
        std::uint32_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [p, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || p != last || part.empty())
            throw ParseError("bad version component in \"" + std::string(text) + "\"");
        v.parts.push_back(value);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
        if (pos == text.size()) throw ParseError("trailing dot in version \"" + std::string(text) + "\"");
    }
    return v;
}

std::string Version::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::strong_ordering Version::operator<=>(const Version& other) const {
    std::size_t n = std::max(parts.size(), other.parts.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t a = i < parts.size() ? parts[i] : 0;
        std::uint32_t b = i < other.parts.size() ? other.parts[i] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

}  // namespace aras
