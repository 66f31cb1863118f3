#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mvp::text {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline int parse_int(std::string_view token) {
    token = trim(token);
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("not an integer: '" + std::string(token) + "'");
    return value;
}

/// Splits "a,b,c" into integers. An empty string yields an empty list.
inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename Range>
std::string join_ints(const Range& values, std::string_view sep = ",") {
    std::string out;
    bool first = true;
    for (auto v : values) {
        if (!first) out += sep;
        out += std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace mvp::text
