#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "text.hpp"

namespace mvp {

/// Arc (from, to) with from < to, i.e. directed left to right.
struct Arc {
    int from;
    int to;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A sorted, duplicate-free set of arcs over vertices [n]. Used for
/// inversion sets, 1-subgraphs and arc diagrams alike.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(int n) : n_(n) {
        if (n < 0) throw InvalidSize("ArcSet: negative vertex count");
    }

    ArcSet(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n < 0) throw InvalidSize("ArcSet: negative vertex count");
        std::sort(arcs_.begin(), arcs_.end());
        for (std::size_t k = 0; k < arcs_.size(); ++k) {
            const Arc& a = arcs_[k];
            if (a.from < 1 || a.from >= a.to || a.to > n)
                throw InvalidSize("arc " + std::to_string(a.from) + "-" + std::to_string(a.to) +
                                  " is not an arc j<i over 1.." + std::to_string(n));
            if (k > 0 && arcs_[k - 1] == a)
                throw InvalidSize("duplicate arc " + std::to_string(a.from) + "-" + std::to_string(a.to));
        }
    }

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return arcs_.empty(); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    auto begin() const noexcept { return arcs_.begin(); }
    auto end() const noexcept { return arcs_.end(); }

    bool contains(Arc a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

    /// Per-vertex count of left-arcs (j, i) ending at i; index 0 unused.
    std::vector<int> left_degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
        for (const Arc& a : arcs_) ++deg[static_cast<std::size_t>(a.to)];
        return deg;
    }

    /// Per-vertex count of incident arcs in either direction; index 0 unused.
    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
        for (const Arc& a : arcs_) {
            ++deg[static_cast<std::size_t>(a.from)];
            ++deg[static_cast<std::size_t>(a.to)];
        }
        return deg;
    }

    friend bool operator==(const ArcSet&, const ArcSet&) = default;
    friend auto operator<=>(const ArcSet&, const ArcSet&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// The set of inversions (j, i), j < i, pi_j > pi_i; also the edge set of G_pi.
using InversionSet = ArcSet;

/// "2-3,2-4"; the empty set renders as "".
inline std::string to_string(const ArcSet& s) {
    std::string out;
    for (const Arc& a : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(a.from) + "-" + std::to_string(a.to);
    }
    return out;
}

inline std::vector<Arc> parse_arcs(std::string_view s) {
    std::vector<Arc> arcs;
    s = text::trim(s);
    if (s.empty()) return arcs;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const auto token = text::trim(s.substr(start, comma - start));
        const auto dash = token.find('-');
        if (dash == std::string_view::npos) throw ParseError("arc token without '-': '" + std::string(token) + "'");
        arcs.push_back({text::parse_int(token.substr(0, dash)), text::parse_int(token.substr(dash + 1))});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return arcs;
}

inline ArcSet parse_arcset(std::string_view s, int n) {
    try {
        return ArcSet(n, parse_arcs(s));
    } catch (const InvalidSize& e) {
        throw ParseError(e.what());
    }
}

}  // namespace mvp
