#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "inversion.hpp"
#include "motzkin.hpp"
#include "parking.hpp"
#include "permutation.hpp"
#include "sandpile.hpp"
#include "subgraph.hpp"

namespace mvp::verify {

/// Outcome of one exhaustive property suite. `checked` counts individual
/// comparisons; `counterexample` holds the first failure, if any.
struct SuiteResult {
    std::string name;
    std::string coverage;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }

    /// Records one comparison; keeps only the first failure.
    void check(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (!ok && !counterexample) counterexample = describe();
    }
};

struct SuiteArgs {
    int n = 6;
    int m = 8;
    std::uint64_t seed = 1;
};

struct Suite {
    std::string name;
    std::string summary;
    int default_n;
    int guard_n;  ///< largest n (or m for thm-4.1) accepted without --force
    bool uses_m;
    std::function<SuiteResult(const SuiteArgs&)> run;
};

namespace detail {

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

inline std::string fibre_text(const std::vector<ParkingPreference>& f) {
    std::string s;
    for (const auto& p : f) s += (s.empty() ? "" : " ") + std::string("(") + to_string(p) + ")";
    return s;
}

inline void for_each_pf_up_to(int n, const std::function<void(const ParkingPreference&)>& f) {
    for (int k = 1; k <= n; ++k) for_each_parking_function(k, f);
}

}  // namespace detail

/// Round trip, injectivity of Psi_{Sub->PF} and subgraph-vs-brute fibre
/// equality for every pi in S_k, k <= n.
inline SuiteResult thm_2_5(const SuiteArgs& a) {
    SuiteResult r{"thm-2.5", "all pi in S_k, k <= " + std::to_string(a.n), 0, {}};
    for (int k = 1; k <= a.n; ++k) {
        auto fibres = fibres_by_outcome(k, a.n);
        for_each_permutation(k, [&](const Permutation& pi) {
            const auto& brute = fibres[pi];
            for (const auto& p : brute)
                r.check(subgraph_to_pf(pf_to_subgraph(p), pi) == p,
                        [&] { return "round trip fails for p = (" + to_string(p) + "), pi = " + to_string(pi); });

            std::set<ParkingPreference> images;
            std::size_t total = 0;
            for_each_one_subgraph(pi, [&](const ArcSet& s) {
                images.insert(subgraph_to_pf(s, pi));
                ++total;
            });
            r.check(images.size() == total, [&] { return "Psi_{Sub->PF} not injective on Sub(" + to_string(pi) + ")"; });

            const auto pruned = fibre_via_subgraphs(pi, true);
            const auto full = fibre_via_subgraphs(pi, false);
            r.check(pruned == brute && full == brute, [&] {
                return "fibre mismatch for pi = " + to_string(pi) + ": subgraphs {" + detail::fibre_text(pruned) + "} brute {" +
                       detail::fibre_text(brute) + "}";
            });
        });
    }
    return r;
}

/// Acyclic G_pi <=> avoids 321 and 3412 <=> every 1-subgraph valid, and the
/// product formula in that case.
inline SuiteResult thm_2_8(const SuiteArgs& a) {
    SuiteResult r{"thm-2.8", "all pi in S_k, k <= " + std::to_string(a.n), 0, {}};
    for (int k = 1; k <= a.n; ++k) {
        for_each_permutation(k, [&](const Permutation& pi) {
            const bool avoids = inversion_graph_acyclic(pi);
            const bool cycle = inversion_graph_has_cycle(pi);
            const std::uint64_t valid = fibre_size(pi, false);
            const std::uint64_t product = one_subgraph_count(pi);
            r.check(avoids == !cycle && avoids == (valid == product), [&] {
                return "pi = " + to_string(pi) + ": avoids-321-3412 = " + std::to_string(avoids) + ", has cycle = " + std::to_string(cycle) +
                       ", valid " + std::to_string(valid) + " of " + std::to_string(product);
            });
        });
    }
    return r;
}

namespace detail {
template <typename Pred>
SuiteResult per_subgraph(std::string name, int n, Pred&& pred) {
    SuiteResult r{std::move(name), "all 1-subgraphs of G_pi, pi in S_k, k <= " + std::to_string(n), 0, {}};
    for (int k = 1; k <= n; ++k)
        for_each_permutation(k, [&](const Permutation& pi) {
            for_each_one_subgraph(pi, [&](const ArcSet& s) {
                r.check(pred(s, pi), [&] { return "S = {" + to_string(s) + "} in Sub(" + to_string(pi) + ")"; });
            });
        });
    return r;
}
}  // namespace detail

/// valid => P2-free.
inline SuiteResult prop_2_10(const SuiteArgs& a) {
    return detail::per_subgraph("prop-2.10", a.n, [](const ArcSet& s, const Permutation& pi) { return !is_valid(s, pi) || is_p2_free(s); });
}

/// HS => valid.
inline SuiteResult prop_2_11(const SuiteArgs& a) {
    return detail::per_subgraph("prop-2.11", a.n, [](const ArcSet& s, const Permutation& pi) { return !is_hs(s) || is_valid(s, pi); });
}

/// Displacement equals the total arc length of the associated subgraph.
inline SuiteResult prop_2_9(const SuiteArgs& a) {
    SuiteResult r{"prop-2.9", "all parking functions of length <= " + std::to_string(a.n), 0, {}};
    detail::for_each_pf_up_to(a.n, [&](const ParkingPreference& p) {
        int length = 0;
        for (const Arc& arc : pf_to_subgraph(p)) length += arc.to - arc.from;
        r.check(displacement_mvp(p) == length, [&] { return "p = (" + to_string(p) + ")"; });
    });
    return r;
}

/// Motzkin parking function <=> phi(p) is a Motzkin path.
inline SuiteResult thm_3_2(const SuiteArgs& a) {
    SuiteResult r{"thm-3.2", "all parking functions of length <= " + std::to_string(a.n), 0, {}};
    detail::for_each_pf_up_to(a.n, [&](const ParkingPreference& p) {
        r.check(is_motzkin_pf(p) == is_motzkin_path(phi(p)), [&] { return "p = (" + to_string(p) + ")"; });
    });
    return r;
}

/// Valid(dec(k)) = NonCross_k as sets, counted by Motzkin numbers, and the
/// path encoding is a bijection onto Motzkin paths.
inline SuiteResult thm_3_8(const SuiteArgs& a) {
    SuiteResult r{"thm-3.8", "k = 1.." + std::to_string(a.n), 0, {}};
    const auto motzkin = motzkin_numbers(a.n);
    for (int k = 1; k <= a.n; ++k) {
        std::set<ArcSet> noncross;
        std::set<LatticePath> paths;
        for_each_noncrossing(k, [&](const NonCrossingMatching& m) {
            noncross.insert(m.arcs());
            const auto path = noncross_to_motzkin(m);
            r.check(is_motzkin_path(path), [&] { return "non-Motzkin image of {" + to_string(m.arcs()) + "}"; });
            paths.insert(path);
        });
        const auto valid = detail::as_set(valid_subgraphs(dec(k), false));
        r.check(valid == noncross, [&] { return "Valid(dec(" + std::to_string(k) + ")) != NonCross_" + std::to_string(k); });
        r.check(noncross.size() == motzkin[static_cast<std::size_t>(k)] && paths.size() == noncross.size(),
                [&] { return "count mismatch at k = " + std::to_string(k); });
    }
    return r;
}

/// m + 1 + floor((m+1)^2 / 2) for bipart(m, 2), m = 0..M. bipart(0, 2) is
/// the identity of size 2.
inline SuiteResult thm_4_1(const SuiteArgs& a) {
    SuiteResult r{"thm-4.1", "m = 0.." + std::to_string(a.m), 0, {}};
    for (int m = 0; m <= a.m; ++m) {
        const Permutation pi = m == 0 ? Permutation::identity(2) : bipart(m, 2);
        const std::uint64_t size = fibre_size(pi);
        const std::uint64_t formula = static_cast<std::uint64_t>(m + 1 + (m + 1) * (m + 1) / 2);
        r.check(size == formula, [&] {
            return "m = " + std::to_string(m) + ": enumerated " + std::to_string(size) + ", formula " + std::to_string(formula);
        });
    }
    return r;
}

/// canonical_toppling(minrec(n - p)) is the MVP outcome; the classical
/// variant gives the classical outcome.
inline SuiteResult thm_5_5(const SuiteArgs& a) {
    SuiteResult r{"thm-5.5", "all parking functions of length <= " + std::to_string(a.n), 0, {}};
    detail::for_each_pf_up_to(a.n, [&](const ParkingPreference& p) {
        r.check(mvp_outcome_via_asm(p) == outcome_mvp(p).outcome, [&] { return "MVP mismatch for p = (" + to_string(p) + ")"; });
        r.check(canonical_toppling(minrec_classical(cori_rossin_inverse(p))) == outcome_classical(p),
                [&] { return "classical mismatch for p = (" + to_string(p) + ")"; });
    });
    return r;
}

/// psi is injective on Valid(dec(k)) with image Valid(split_left(2, k-2)).
inline SuiteResult thm_6_3(const SuiteArgs& a) {
    SuiteResult r{"thm-6.3", "k = 3.." + std::to_string(a.n), 0, {}};
    const auto motzkin = motzkin_numbers(a.n);
    for (int k = 3; k <= a.n; ++k) {
        const auto source = valid_subgraphs(dec(k), true);
        std::set<ArcSet> image;
        for (const auto& s : source) image.insert(psi_dec_to_split(s, k));
        const auto target = detail::as_set(valid_subgraphs(split_left(2, k - 2), true));
        r.check(image.size() == source.size(), [&] { return "psi not injective at k = " + std::to_string(k); });
        r.check(image == target, [&] {
            for (const auto& s : source)
                if (!target.count(psi_dec_to_split(s, k)))
                    return "psi({" + to_string(s) + "}) = {" + to_string(psi_dec_to_split(s, k)) + "} is not valid for split_left(2," +
                           std::to_string(k - 2) + ")";
            return "image misses part of Valid(split_left(2," + std::to_string(k - 2) + "))";
        });
        r.check(target.size() == motzkin[static_cast<std::size_t>(k)], [&] { return "count mismatch at k = " + std::to_string(k); });
    }
    return r;
}

inline constexpr int kAbelianCasesPerSize = 200;

/// Random recurrent configurations plus random extra load, stabilised in
/// random orders, always reach the same configuration with the same
/// toppling multiset.
inline SuiteResult abelian(const SuiteArgs& a) {
    SuiteResult r{"abelian", std::to_string(kAbelianCasesPerSize) + " random cases per n <= " + std::to_string(a.n), 0, {}};
    std::mt19937_64 rng(a.seed);
    for (int n = 1; n <= a.n; ++n) {
        std::uniform_int_distribution<int> spot(1, n), extra(0, 2 * n);
        for (int trial = 0; trial < kAbelianCasesPerSize; ++trial) {
            std::vector<int> prefs(static_cast<std::size_t>(n));
            do {
                for (auto& v : prefs) v = spot(rng);
            } while (!mvp::detail::sorted_prefix_check(prefs));
            const SandpileConfig base = cori_rossin_inverse(ParkingPreference(prefs));
            std::vector<int> loaded(base.grains().begin(), base.grains().end());
            for (auto& g : loaded) g += extra(rng);
            const SandpileConfig c(loaded);

            const Stabilisation reference = stabilise(c);
            auto sorted_reference = reference.topplings;
            std::sort(sorted_reference.begin(), sorted_reference.end());
            for (int order = 0; order < 3; ++order) {
                Stabilisation other = stabilise_random(c, rng);
                std::sort(other.topplings.begin(), other.topplings.end());
                r.check(other.config == reference.config && other.topplings == sorted_reference && other.config.is_stable(),
                        [&] { return "c = " + to_string(c); });
            }
        }
    }
    return r;
}

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"thm-2.5", "subgraph/parking-function round trip, injectivity, fibre oracle", 6, 7, false, thm_2_5},
        {"thm-2.8", "acyclic inversion graph <=> all 1-subgraphs valid", 6, 7, false, thm_2_8},
        {"prop-2.9", "displacement equals total arc length", 6, 7, false, prop_2_9},
        {"prop-2.10", "valid => P2-free", 6, 7, false, prop_2_10},
        {"prop-2.11", "HS => valid", 6, 7, false, prop_2_11},
        {"thm-3.2", "Motzkin parking function <=> Motzkin path", 6, 7, false, thm_3_2},
        {"thm-3.8", "Valid(dec(n)) = non-crossing matchings", 8, 10, false, thm_3_8},
        {"thm-4.1", "bipartite m,2 fibre formula", 8, 12, true, thm_4_1},
        {"thm-5.5", "MVP outcome through sandpile minrec and canonical toppling", 6, 7, false, thm_5_5},
        {"thm-6.3", "dec(n) to split_left(2,n-2) bijection", 8, 10, false, thm_6_3},
        {"abelian", "stabilisation independent of toppling order", 8, 10, false, abelian},
    };
    return all;
}

inline const Suite* find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace mvp::verify
