#pragma once

#include <numeric>
#include <vector>

#include "arcset.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace mvp {

inline InversionSet inversions(const Permutation& pi) {
    const auto w = pi.word();
    const int n = pi.size();
    std::vector<Arc> arcs;
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i)
            if (w[static_cast<std::size_t>(j - 1)] > w[static_cast<std::size_t>(i - 1)]) arcs.push_back({j, i});
    return InversionSet(n, std::move(arcs));
}

/// LInv(pi, i) = { j : (j, i) is an inversion }, ascending.
inline std::vector<int> left_inversions(const Permutation& pi, int i) {
    if (i < 1 || i > pi.size()) throw IndexOutOfRange("vertex " + std::to_string(i) + " outside 1.." + std::to_string(pi.size()));
    const auto w = pi.word();
    std::vector<int> out;
    for (int j = 1; j < i; ++j)
        if (w[static_cast<std::size_t>(j - 1)] > w[static_cast<std::size_t>(i - 1)]) out.push_back(j);
    return out;
}

/// All left-inversion lists at once; index 0 is empty.
inline std::vector<std::vector<int>> left_inversion_table(const Permutation& pi) {
    std::vector<std::vector<int>> table(static_cast<std::size_t>(pi.size()) + 1);
    for (int i = 1; i <= pi.size(); ++i) table[static_cast<std::size_t>(i)] = left_inversions(pi, i);
    return table;
}

namespace detail {

// Chooses host positions for pattern entries in order, rejecting a choice
// as soon as it disagrees with an earlier one.
inline bool embed_pattern(std::span<const int> host, std::span<const int> pattern, std::vector<int>& chosen, std::size_t next_pos) {
    const std::size_t k = chosen.size();
    if (k == pattern.size()) return true;
    const std::size_t remaining = pattern.size() - k;
    for (std::size_t pos = next_pos; pos + remaining <= host.size(); ++pos) {
        bool consistent = true;
        for (std::size_t a = 0; a < k && consistent; ++a) {
            const bool host_less = host[static_cast<std::size_t>(chosen[a])] < host[pos];
            const bool pattern_less = pattern[a] < pattern[k];
            consistent = host_less == pattern_less;
        }
        if (!consistent) continue;
        chosen.push_back(static_cast<int>(pos));
        if (embed_pattern(host, pattern, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& pi, const Permutation& tau) {
    if (tau.size() > pi.size()) throw PatternLongerThanHost("pattern of length " + std::to_string(tau.size()) +
                                                            " longer than host of length " + std::to_string(pi.size()));
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(tau.size()));
    return detail::embed_pattern(pi.word(), tau.word(), chosen, 0);
}

/// G_pi is acyclic iff pi avoids 321 and 3412.
inline bool inversion_graph_acyclic(const Permutation& pi) {
    static const Permutation p321 = parse_permutation("321");
    static const Permutation p3412 = parse_permutation("3412");
    const bool has321 = pi.size() >= 3 && contains_pattern(pi, p321);
    const bool has3412 = pi.size() >= 4 && contains_pattern(pi, p3412);
    return !has321 && !has3412;
}

/// Direct cycle search on G_pi with union-find: an edge joining two vertices
/// that are already connected closes a cycle.
inline bool inversion_graph_has_cycle(const Permutation& pi) {
    std::vector<int> parent(static_cast<std::size_t>(pi.size()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Arc& a : inversions(pi)) {
        const int ra = find(a.from), rb = find(a.to);
        if (ra == rb) return true;
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return false;
}

}  // namespace mvp
