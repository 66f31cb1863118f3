#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "text.hpp"

namespace mvp {

/// Grain counts on the vertices of K_n (1-based). A vertex is stable while it
/// holds fewer than n grains; toppling sends one grain to each other vertex
/// and one to the sink.
class SandpileConfig {
public:
    SandpileConfig() = default;

    explicit SandpileConfig(std::vector<int> grains) : grains_(std::move(grains)) {
        for (int g : grains_)
            if (g < 0) throw NegativeEntry("negative grain count " + std::to_string(g));
    }

    int size() const noexcept { return static_cast<int>(grains_.size()); }

    int operator()(int vertex) const {
        if (vertex < 1 || vertex > size()) throw IndexOutOfRange("vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(size()));
        return grains_[static_cast<std::size_t>(vertex - 1)];
    }

    std::span<const int> grains() const noexcept { return grains_; }

    bool is_stable(int vertex) const { return (*this)(vertex) < size(); }
    bool is_stable() const {
        return std::all_of(grains_.begin(), grains_.end(), [n = size()](int g) { return g < n; });
    }

    friend bool operator==(const SandpileConfig&, const SandpileConfig&) = default;
    friend auto operator<=>(const SandpileConfig&, const SandpileConfig&) = default;

private:
    std::vector<int> grains_;
};

inline std::string to_string(const SandpileConfig& c) { return text::join_ints(c.grains()); }

inline SandpileConfig parse_config(std::string_view s) {
    try {
        return SandpileConfig(text::parse_int_list(s));
    } catch (const NegativeEntry& e) {
        throw ParseError(e.what());
    }
}

inline SandpileConfig topple(const SandpileConfig& c, int vertex) {
    if (c.is_stable(vertex)) throw VertexStable("vertex " + std::to_string(vertex) + " is stable in " + to_string(c));
    std::vector<int> g(c.grains().begin(), c.grains().end());
    for (auto& x : g) ++x;
    g[static_cast<std::size_t>(vertex - 1)] -= c.size() + 1;
    return SandpileConfig(std::move(g));
}

struct Stabilisation {
    SandpileConfig config;
    std::vector<int> topplings;
};

/// Topples the lowest-index unstable vertex until none remains.
inline Stabilisation stabilise(const SandpileConfig& c) {
    Stabilisation out{c, {}};
    const int n = c.size();
    while (true) {
        int v = 1;
        while (v <= n && out.config.is_stable(v)) ++v;
        if (v > n) return out;
        out.config = topple(out.config, v);
        out.topplings.push_back(v);
    }
}

/// Same as stabilise() but each step topples an unstable vertex drawn
/// uniformly from `rng`.
template <typename Rng>
Stabilisation stabilise_random(const SandpileConfig& c, Rng& rng) {
    Stabilisation out{c, {}};
    std::vector<int> unstable;
    while (true) {
        unstable.clear();
        for (int v = 1; v <= c.size(); ++v)
            if (!out.config.is_stable(v)) unstable.push_back(v);
        if (unstable.empty()) return out;
        std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
        const int v = unstable[pick(rng)];
        out.config = topple(out.config, v);
        out.topplings.push_back(v);
    }
}

namespace detail {

inline SandpileConfig add_one_everywhere(const SandpileConfig& c) {
    std::vector<int> g(c.grains().begin(), c.grains().end());
    for (auto& x : g) ++x;
    return SandpileConfig(std::move(g));
}

/// Greedy burning of c + (1,...,1): topple any not-yet-toppled unstable
/// vertex, lowest index first. Returns the order reached.
inline std::vector<int> burn(const SandpileConfig& c) {
    const int n = c.size();
    SandpileConfig current = add_one_everywhere(c);
    std::vector<bool> burnt(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> order;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 1; v <= n; ++v) {
            if (burnt[static_cast<std::size_t>(v)] || current.is_stable(v)) continue;
            current = topple(current, v);
            burnt[static_cast<std::size_t>(v)] = true;
            order.push_back(v);
            progress = true;
            break;
        }
    }
    return order;
}

}  // namespace detail

/// Burning test: c is recurrent iff c + (1,...,1) topples every vertex once.
inline bool is_recurrent(const SandpileConfig& c) {
    if (!c.is_stable()) throw NotStable(to_string(c) + " is not stable");
    const bool recurrent = static_cast<int>(detail::burn(c).size()) == c.size();
    if (recurrent && stabilise(detail::add_one_everywhere(c)).config != c)
        throw std::logic_error("burning succeeded but Stab(c~) != c for " + to_string(c));
    return recurrent;
}

/// Grain counts form a permutation of {0, ..., n-1}.
inline bool is_min_recurrent(const SandpileConfig& c) {
    std::vector<int> sorted(c.grains().begin(), c.grains().end());
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < c.size(); ++k)
        if (sorted[static_cast<std::size_t>(k)] != k) return false;
    return true;
}

/// pi_i is the vertex holding n - i grains.
inline Permutation canonical_toppling(const SandpileConfig& c) {
    if (!is_min_recurrent(c)) throw NotMinimalRecurrent(to_string(c) + " is not minimal recurrent");
    const int n = c.size();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) w[static_cast<std::size_t>(n - c(v) - 1)] = v;
    return Permutation(std::move(w));
}

/// p = n - c.
inline ParkingPreference cori_rossin(const SandpileConfig& c) {
    const int n = c.size();
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        if (c(v) >= n) throw NegativeEntry("complement n - c has a non-positive entry at vertex " + std::to_string(v));
        p[static_cast<std::size_t>(v - 1)] = n - c(v);
    }
    return ParkingPreference(std::move(p));
}

/// c = n - p.
inline SandpileConfig cori_rossin_inverse(const ParkingPreference& p) {
    const int n = p.size();
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int car = 1; car <= n; ++car) c[static_cast<std::size_t>(car - 1)] = n - p(car);
    return SandpileConfig(std::move(c));
}

// ++ Reduction to minimal recurrent configurations ++++++++++++++++++++++++++

/// One pass of the duplicate-removal loop: the first duplicate sits at j,
/// its earlier twin at i, and `values` lists the decremented vertex's value
/// after each unit step (starting with its value before the first step).
struct MinrecIteration {
    int j;
    int i;
    int decremented;
    std::vector<int> values;
};

enum class MinrecVariant {
    mvp,        ///< decrement the earlier twin c_i
    classical,  ///< decrement the later twin c_j
};

/// Applies one iteration in place; nullopt when no duplicate remains.
inline std::optional<MinrecIteration> minrec_step(std::vector<int>& c, MinrecVariant variant = MinrecVariant::mvp) {
    const int n = static_cast<int>(c.size());
    int j = 0, i = 0;
    for (int b = 2; b <= n && j == 0; ++b)
        for (int a = 1; a < b; ++a)
            if (c[static_cast<std::size_t>(a - 1)] == c[static_cast<std::size_t>(b - 1)]) {
                j = b;
                i = a;
                break;
            }
    if (j == 0) return std::nullopt;

    const int target = variant == MinrecVariant::mvp ? i : j;
    auto& value = c[static_cast<std::size_t>(target - 1)];
    MinrecIteration it{j, i, target, {value}};
    auto collides = [&] {
        for (int k = 1; k <= j; ++k)
            if (k != target && c[static_cast<std::size_t>(k - 1)] == value) return true;
        return false;
    };
    while (collides()) {
        --value;
        if (value < 0) throw std::logic_error("minrec: grain count dropped below zero; input was not recurrent");
        it.values.push_back(value);
    }
    return it;
}

namespace detail {
inline SandpileConfig run_minrec(const SandpileConfig& c, MinrecVariant variant, std::vector<MinrecIteration>* trace) {
    if (!c.is_stable() || !is_recurrent(c)) throw NotRecurrent(to_string(c) + " is not recurrent");
    std::vector<int> g(c.grains().begin(), c.grains().end());
    while (auto it = minrec_step(g, variant))
        if (trace) trace->push_back(std::move(*it));
    return SandpileConfig(std::move(g));
}
}  // namespace detail

inline SandpileConfig minrec(const SandpileConfig& c, std::vector<MinrecIteration>* trace = nullptr) {
    return detail::run_minrec(c, MinrecVariant::mvp, trace);
}

inline SandpileConfig minrec_classical(const SandpileConfig& c, std::vector<MinrecIteration>* trace = nullptr) {
    return detail::run_minrec(c, MinrecVariant::classical, trace);
}

/// canonical_toppling(minrec(n - p)); equals the MVP outcome of p.
inline Permutation mvp_outcome_via_asm(const ParkingPreference& p) {
    if (!is_parking_function(p)) throw NotAParkingFunction(to_string(p) + " is not a parking function");
    return canonical_toppling(minrec(cori_rossin_inverse(p)));
}

}  // namespace mvp
