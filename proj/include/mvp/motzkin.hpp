#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arcset.hpp"
#include "errors.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "subgraph.hpp"

namespace mvp {

// ++ Lattice paths ++++++++++++++++++++++++++++++++++++++++++++++++++++++++++

enum class Step : char { U = 'U', H = 'H', D = 'D' };

using LatticePath = std::vector<Step>;

inline std::string to_string(const LatticePath& path) {
    std::string s;
    s.reserve(path.size());
    for (Step st : path) s += static_cast<char>(st);
    return s;
}

inline LatticePath parse_path(std::string_view s) {
    s = text::trim(s);
    LatticePath path;
    path.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case 'U': path.push_back(Step::U); break;
            case 'H': path.push_back(Step::H); break;
            case 'D': path.push_back(Step::D); break;
            default: throw ParseError(std::string("bad lattice step '") + ch + "'");
        }
    }
    return path;
}

/// Never below the axis and ends on it. The empty path qualifies.
inline bool is_motzkin_path(const LatticePath& path) {
    int height = 0;
    for (Step st : path) {
        if (st == Step::U) ++height;
        if (st == Step::D && --height < 0) return false;
    }
    return height == 0;
}

/// Motzkin(0..n) by the standard recurrence M_k = M_{k-1} + sum M_a M_{k-2-a}.
inline std::vector<std::uint64_t> motzkin_numbers(int n) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    m[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::uint64_t v = m[static_cast<std::size_t>(k - 1)];
        for (int a = 0; a <= k - 2; ++a) v += m[static_cast<std::size_t>(a)] * m[static_cast<std::size_t>(k - 2 - a)];
        m[static_cast<std::size_t>(k)] = v;
    }
    return m;
}

// ++ Motzkin parking functions ++++++++++++++++++++++++++++++++++++++++++++++

namespace detail {
inline std::vector<int> spot_multiplicities(const ParkingPreference& p) {
    std::vector<int> count(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int v : p.prefs()) ++count[static_cast<std::size_t>(v)];
    return count;
}
}  // namespace detail

/// Every spot preferred by at most two cars.
inline bool is_motzkin_pf(const ParkingPreference& p) {
    if (!is_parking_function(p)) throw NotAParkingFunction(to_string(p) + " is not a parking function");
    const auto count = detail::spot_multiplicities(p);
    return std::all_of(count.begin(), count.end(), [](int c) { return c <= 2; });
}

/// Step j is U, H or D as spot j is preferred by >= 2, exactly 1 or 0 cars.
inline LatticePath phi(const ParkingPreference& p) {
    const auto count = detail::spot_multiplicities(p);
    LatticePath path;
    for (int j = 1; j <= p.size(); ++j) {
        const int c = count[static_cast<std::size_t>(j)];
        path.push_back(c >= 2 ? Step::U : c == 1 ? Step::H : Step::D);
    }
    return path;
}

/// The non-decreasing parking function with phi(p) = path, built by the
/// streaming construction: U writes the current spot twice, H once, D never.
inline ParkingPreference phi_inverse(const LatticePath& path) {
    if (!is_motzkin_path(path)) throw NotAMotzkinPath(to_string(path) + " is not a Motzkin path");
    if (path.empty()) throw InvalidSize("phi_inverse: empty path has no parking function");
    const int n = static_cast<int>(path.size());
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    int i = 1;
    for (int k = 1; k <= n; ++k) {
        switch (path[static_cast<std::size_t>(k - 1)]) {
            case Step::U:
                p[static_cast<std::size_t>(i - 1)] = k;
                p[static_cast<std::size_t>(i)] = k;
                i += 2;
                break;
            case Step::H:
                p[static_cast<std::size_t>(i - 1)] = k;
                i += 1;
                break;
            case Step::D: break;
        }
    }
    return ParkingPreference(std::move(p));
}

/// The unique rearrangement of p whose MVP outcome is dec(n). Found by
/// scanning every distinct rearrangement; anything other than exactly one
/// hit is an internal error.
inline ParkingPreference class_representative_dec(const ParkingPreference& p) {
    if (!is_motzkin_pf(p)) throw NotAMotzkinParkingFunction(to_string(p) + " is not a Motzkin parking function");
    const int n = p.size();
    const Permutation target = dec(n);
    std::vector<int> arrangement(p.prefs().begin(), p.prefs().end());
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
    std::vector<ParkingPreference> hits;
    do {
        if (detail::run_mvp(arrangement, occupant) && std::equal(target.word().begin(), target.word().end(), occupant.begin() + 1))
            hits.emplace_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    if (hits.size() != 1)
        throw std::logic_error("class_representative_dec: " + std::to_string(hits.size()) + " rearrangements of " + to_string(p) +
                               " reach dec(n); expected exactly one");
    return hits.front();
}

// ++ Non-crossing matchings +++++++++++++++++++++++++++++++++++++++++++++++++

/// Each vertex meets at most one arc and no two arcs cross.
inline bool is_noncrossing_matching(const ArcSet& s) {
    const auto deg = s.degrees();
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d > 1; })) return false;
    const auto arcs = s.arcs();
    for (const Arc& a : arcs)
        for (const Arc& b : arcs)
            if (a.from < b.from && b.from < a.to && a.to < b.to) return false;
    return true;
}

/// An ArcSet known to be a non-crossing matching.
class NonCrossingMatching {
public:
    explicit NonCrossingMatching(ArcSet arcs) : arcs_(std::move(arcs)) {
        if (!is_noncrossing_matching(arcs_)) throw InvalidSize("{" + to_string(arcs_) + "} is not a non-crossing matching");
    }

    const ArcSet& arcs() const noexcept { return arcs_; }
    int n() const noexcept { return arcs_.n(); }

    friend bool operator==(const NonCrossingMatching&, const NonCrossingMatching&) = default;
    friend auto operator<=>(const NonCrossingMatching&, const NonCrossingMatching&) = default;

private:
    ArcSet arcs_;
};

namespace detail {

// Interval [a, b]: either a is isolated, or a is matched to some k and the
// inside (a, k) and outside (k, b] are independent subproblems.
inline void noncrossing_rec(int a, int b, std::vector<Arc>& arcs, const std::function<void()>& done_with_interval) {
    if (a > b) {
        done_with_interval();
        return;
    }
    noncrossing_rec(a + 1, b, arcs, done_with_interval);
    for (int k = a + 1; k <= b; ++k) {
        arcs.push_back({a, k});
        noncrossing_rec(a + 1, k - 1, arcs, [&] { noncrossing_rec(k + 1, b, arcs, done_with_interval); });
        arcs.pop_back();
    }
}

}  // namespace detail

template <typename F>
void for_each_noncrossing(int n, F&& f) {
    if (n < 0) throw InvalidSize("for_each_noncrossing: n must be >= 0");
    std::vector<Arc> arcs;
    detail::noncrossing_rec(1, n, arcs, [&] { f(NonCrossingMatching(ArcSet(n, arcs))); });
}

inline std::vector<NonCrossingMatching> enumerate_noncrossing(int n) {
    std::vector<NonCrossingMatching> out;
    for_each_noncrossing(n, [&](NonCrossingMatching m) { out.push_back(std::move(m)); });
    return out;
}

/// U at arc openers, D at closers, H at isolated vertices.
inline LatticePath noncross_to_motzkin(const NonCrossingMatching& m) {
    LatticePath path(static_cast<std::size_t>(m.n()), Step::H);
    for (const Arc& a : m.arcs()) {
        path[static_cast<std::size_t>(a.from - 1)] = Step::U;
        path[static_cast<std::size_t>(a.to - 1)] = Step::D;
    }
    return path;
}

struct VertexInterval {
    int first;
    int last;

    friend bool operator==(const VertexInterval&, const VertexInterval&) = default;
};

/// Prime factors: outermost arcs as intervals plus outermost isolated
/// vertices as singletons. Together they partition [n].
inline std::vector<VertexInterval> prime_decomposition(const NonCrossingMatching& m) {
    std::vector<int> partner(static_cast<std::size_t>(m.n()) + 1, 0);
    for (const Arc& a : m.arcs()) partner[static_cast<std::size_t>(a.from)] = a.to;
    std::vector<VertexInterval> out;
    for (int v = 1; v <= m.n();) {
        const int close = partner[static_cast<std::size_t>(v)];
        if (close != 0) {
            out.push_back({v, close});
            v = close + 1;
        } else {
            out.push_back({v, v});
            ++v;
        }
    }
    return out;
}

/// Fib_MVP(dec(n)) as the image of all non-crossing matchings, sorted.
inline std::vector<ParkingPreference> decreasing_fibre(int n) {
    if (n < 1) throw InvalidSize("decreasing_fibre: n must be >= 1");
    const Permutation pi = dec(n);
    std::vector<ParkingPreference> out;
    for_each_noncrossing(n, [&](const NonCrossingMatching& m) { out.push_back(subgraph_to_pf(m.arcs(), pi)); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Maps Valid(dec(n)) to Valid(split_left(2, n-2)):
///  (1) without arc (n-1, n): unchanged;
///  (2) with (n-1, n) and n-2 isolated: (n-1, n) becomes (n-2, n-1), (n-2, n);
///  (3) with (n-1, n) and (i, n-2): those two become (i, n-1), (i, n), and
///      arcs strictly inside (i, n-2) shift one column right.
inline ArcSet psi_dec_to_split(const ArcSet& s, int n) {
    if (n < 3) throw InvalidSize("psi_dec_to_split: n must be >= 3");
    if (s.n() != n || !is_noncrossing_matching(s))
        throw NotAValidDecSubgraph("{" + to_string(s) + "} is not a valid 1-subgraph of G_dec(" + std::to_string(n) + ")");
    const Arc last{n - 1, n};
    if (!s.contains(last)) return s;

    const auto into_pivot = std::find_if(s.begin(), s.end(), [&](const Arc& a) { return a.to == n - 2; });
    std::vector<Arc> out;
    if (into_pivot == s.end()) {
        for (const Arc& a : s)
            if (a != last) out.push_back(a);
        out.push_back({n - 2, n - 1});
        out.push_back({n - 2, n});
        return ArcSet(n, std::move(out));
    }

    const int i = into_pivot->from;
    for (const Arc& a : s) {
        if (a == last || a == *into_pivot) continue;
        if (a.from > i && a.to < n - 2)
            out.push_back({a.from + 1, a.to + 1});
        else
            out.push_back(a);
    }
    out.push_back({i, n - 1});
    out.push_back({i, n});
    return ArcSet(n, std::move(out));
}

}  // namespace mvp
