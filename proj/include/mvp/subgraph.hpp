#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "arcset.hpp"
#include "errors.hpp"
#include "inversion.hpp"
#include "parking.hpp"
#include "permutation.hpp"

namespace mvp {

/// Every arc is an inversion of pi and every vertex has at most one left-arc.
inline bool is_one_subgraph(const ArcSet& s, const Permutation& pi) {
    if (s.n() != pi.size()) return false;
    const auto w = pi.word();
    for (const Arc& a : s)
        if (w[static_cast<std::size_t>(a.from - 1)] < w[static_cast<std::size_t>(a.to - 1)]) return false;
    const auto deg = s.left_degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
}

/// |Sub(pi)| = prod_i (1 + |LInv(pi, i)|).
inline std::uint64_t one_subgraph_count(const Permutation& pi) {
    std::uint64_t product = 1;
    for (int i = 1; i <= pi.size(); ++i) product *= 1 + left_inversions(pi, i).size();
    return product;
}

namespace detail {

inline void require_one_subgraph(const ArcSet& s, const Permutation& pi) {
    if (!is_one_subgraph(s, pi))
        throw NotASubgraphOf("{" + to_string(s) + "} is not a 1-subgraph of G_" + to_string(pi));
}

// A 1-subgraph is stored as choice[i] = j for its left-arc (j, i), or 0.
// Index 0 is unused.

inline ArcSet choice_to_arcset(std::span<const int> choice) {
    const int n = static_cast<int>(choice.size()) - 1;
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        if (choice[static_cast<std::size_t>(i)] != 0) arcs.push_back({choice[static_cast<std::size_t>(i)], i});
    return ArcSet(n, std::move(arcs));
}

inline void choice_to_prefs(std::span<const int> word, std::span<const int> choice, std::span<int> prefs) {
    const std::size_t n = word.size();
    for (std::size_t i = 1; i <= n; ++i) {
        const int j = choice[i];
        prefs[static_cast<std::size_t>(word[i - 1] - 1)] = j != 0 ? j : static_cast<int>(i);
    }
}

inline bool choice_is_hs(std::span<const int> choice, std::vector<Arc>& scratch) {
    scratch.clear();
    for (std::size_t i = 1; i < choice.size(); ++i)
        if (choice[i] != 0) scratch.push_back({choice[i], static_cast<int>(i)});
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t k = 1; k < scratch.size(); ++k)
        if (scratch[k - 1].to >= scratch[k].from) return false;
    return true;
}

/// Runs the MVP process on Psi_{Sub->PF}(choice) and compares with pi,
/// reusing its buffers between calls.
class ValidityProbe {
public:
    explicit ValidityProbe(const Permutation& pi)
        : word_(pi.word().begin(), pi.word().end()),
          prefs_(word_.size()),
          occupant_(word_.size() + 1) {}

    bool operator()(std::span<const int> choice) {
        choice_to_prefs(word_, choice, prefs_);
        if (!run_mvp(prefs_, occupant_)) return false;
        return std::equal(word_.begin(), word_.end(), occupant_.begin() + 1);
    }

    std::span<const int> last_prefs() const noexcept { return prefs_; }

private:
    std::vector<int> word_;
    std::vector<int> prefs_;
    std::vector<int> occupant_;
};

/// Mixed-radix walk over Sub(pi): vertices in ascending order, each choosing
/// "no left-arc" first and then j in LInv(pi, i) ascending. With pruning, a
/// choice (j, i) is rejected when j already has a left-arc, which is exactly
/// the P2-free condition since every arc out of j is chosen after j's own.
class SubgraphWalk {
public:
    SubgraphWalk(const Permutation& pi, bool prune_p2)
        : n_(pi.size()), linv_(left_inversion_table(pi)), prune_(prune_p2) {}

    int size() const noexcept { return n_; }

    template <typename Leaf>
    void run(std::vector<int>& choice, int from_vertex, Leaf& leaf) const {
        descend(choice, from_vertex, leaf);
    }

    /// All partial choices fixing vertices 1..depth, in walk order.
    std::vector<std::vector<int>> prefixes(int depth) const {
        std::vector<std::vector<int>> out;
        std::vector<int> choice(static_cast<std::size_t>(n_) + 1, 0);
        collect(choice, 1, depth, out);
        return out;
    }

private:
    template <typename Leaf>
    void descend(std::vector<int>& choice, int i, Leaf& leaf) const {
        if (i > n_) {
            leaf(std::span<const int>(choice));
            return;
        }
        auto& slot = choice[static_cast<std::size_t>(i)];
        slot = 0;
        descend(choice, i + 1, leaf);
        for (int j : linv_[static_cast<std::size_t>(i)]) {
            if (prune_ && choice[static_cast<std::size_t>(j)] != 0) continue;
            slot = j;
            descend(choice, i + 1, leaf);
        }
        slot = 0;
    }

    void collect(std::vector<int>& choice, int i, int depth, std::vector<std::vector<int>>& out) const {
        if (i > depth) {
            out.push_back(choice);
            return;
        }
        auto& slot = choice[static_cast<std::size_t>(i)];
        slot = 0;
        collect(choice, i + 1, depth, out);
        for (int j : linv_[static_cast<std::size_t>(i)]) {
            if (prune_ && choice[static_cast<std::size_t>(j)] != 0) continue;
            slot = j;
            collect(choice, i + 1, depth, out);
        }
        slot = 0;
    }

    int n_;
    std::vector<std::vector<int>> linv_;
    bool prune_;
};

/// Walks Sub(pi) split into disjoint prefix ranges over `jobs` threads. Each
/// thread owns one leaf object built by make_leaf(); the leaves are returned
/// in thread order so the caller merges deterministically.
template <typename MakeLeaf>
auto parallel_walk(const Permutation& pi, bool prune_p2, int jobs, MakeLeaf&& make_leaf) {
    using Leaf = decltype(make_leaf());
    const SubgraphWalk walk(pi, prune_p2);
    const int n = walk.size();
    jobs = std::max(1, jobs);
    std::vector<Leaf> leaves;
    leaves.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) leaves.push_back(make_leaf());

    if (jobs == 1) {
        std::vector<int> choice(static_cast<std::size_t>(n) + 1, 0);
        walk.run(choice, 1, leaves.front());
        return leaves;
    }

    int depth = 0;
    auto prefixes = walk.prefixes(depth);
    while (depth < n && prefixes.size() < static_cast<std::size_t>(4 * jobs)) prefixes = walk.prefixes(++depth);

    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t k = static_cast<std::size_t>(t); k < prefixes.size(); k += static_cast<std::size_t>(jobs)) {
                std::vector<int> choice = prefixes[k];
                walk.run(choice, depth + 1, leaves[static_cast<std::size_t>(t)]);
            }
        });
    }
    for (auto& w : workers) w.join();
    return leaves;
}

}  // namespace detail

/// Calls f(S) for each S in Sub(pi), in mixed-radix order. With prune_p2,
/// only P2-free 1-subgraphs are produced.
template <typename F>
void for_each_one_subgraph(const Permutation& pi, F&& f, bool prune_p2 = false) {
    const detail::SubgraphWalk walk(pi, prune_p2);
    std::vector<int> choice(static_cast<std::size_t>(pi.size()) + 1, 0);
    auto leaf = [&](std::span<const int> c) { f(detail::choice_to_arcset(c)); };
    walk.run(choice, 1, leaf);
}

inline std::vector<ArcSet> enumerate_one_subgraphs(const Permutation& pi, bool prune_p2 = false) {
    std::vector<ArcSet> out;
    for_each_one_subgraph(pi, [&](const ArcSet& s) { out.push_back(s); }, prune_p2);
    return out;
}

/// Psi_{Sub->PF}: p_{pi_i} = j for the left-arc (j, i) of S, else i.
inline ParkingPreference subgraph_to_pf(const ArcSet& s, const Permutation& pi) {
    detail::require_one_subgraph(s, pi);
    const int n = pi.size();
    std::vector<int> choice(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : s) choice[static_cast<std::size_t>(a.to)] = a.from;
    std::vector<int> prefs(static_cast<std::size_t>(n));
    detail::choice_to_prefs(pi.word(), choice, prefs);
    return ParkingPreference(std::move(prefs));
}

/// Psi_{PF->Sub}: S(p) = {(j, i) in Inv(pi) : p_{pi_i} = j} with pi the MVP outcome.
inline ArcSet pf_to_subgraph(const ParkingPreference& p) {
    const Permutation pi = outcome_mvp(p).outcome;
    const auto w = pi.word();
    std::vector<Arc> arcs;
    for (int i = 1; i <= pi.size(); ++i) {
        const int j = p(w[static_cast<std::size_t>(i - 1)]);
        if (j < i && w[static_cast<std::size_t>(j - 1)] > w[static_cast<std::size_t>(i - 1)]) arcs.push_back({j, i});
    }
    return ArcSet(pi.size(), std::move(arcs));
}

/// Valid iff the MVP outcome of Psi_{Sub->PF}(S) is pi. A preference that
/// fails to park counts as invalid.
inline bool is_valid(const ArcSet& s, const Permutation& pi) {
    const ParkingPreference p = subgraph_to_pf(s, pi);
    std::vector<int> occupant(static_cast<std::size_t>(pi.size()) + 1);
    if (!detail::run_mvp(p.prefs(), occupant)) return false;
    return std::equal(pi.word().begin(), pi.word().end(), occupant.begin() + 1);
}

/// No i < j < k with (i, j) and (j, k) both in S.
inline bool is_p2_free(const ArcSet& s) {
    const auto deg_left = s.left_degrees();
    for (const Arc& a : s)
        if (deg_left[static_cast<std::size_t>(a.from)] > 0) return false;
    return true;
}

/// Horizontally separated: any two distinct arcs (j, i), (j', i') satisfy
/// i < j' or i' < j, endpoints included.
inline bool is_hs(const ArcSet& s) {
    const auto arcs = s.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b)
            if (!(arcs[a].to < arcs[b].from || arcs[b].to < arcs[a].from)) return false;
    return true;
}

/// Fib_MVP(pi) as {Psi_{Sub->PF}(S) : S valid}, sorted lexicographically.
inline std::vector<ParkingPreference> fibre_via_subgraphs(const Permutation& pi, bool prune_p2 = true, int jobs = 1) {
    struct Collector {
        detail::ValidityProbe probe;
        std::vector<std::vector<int>> found;
        void operator()(std::span<const int> choice) {
            if (probe(choice)) found.emplace_back(probe.last_prefs().begin(), probe.last_prefs().end());
        }
    };
    auto leaves = detail::parallel_walk(pi, prune_p2, jobs, [&] { return Collector{detail::ValidityProbe(pi), {}}; });
    std::vector<ParkingPreference> out;
    for (auto& leaf : leaves)
        for (auto& prefs : leaf.found) out.emplace_back(std::move(prefs));
    std::sort(out.begin(), out.end());
    return out;
}

/// Valid 1-subgraphs of G_pi, in walk order.
inline std::vector<ArcSet> valid_subgraphs(const Permutation& pi, bool prune_p2 = true) {
    std::vector<ArcSet> out;
    const detail::SubgraphWalk walk(pi, prune_p2);
    detail::ValidityProbe probe(pi);
    std::vector<int> choice(static_cast<std::size_t>(pi.size()) + 1, 0);
    auto leaf = [&](std::span<const int> c) {
        if (probe(c)) out.push_back(detail::choice_to_arcset(c));
    };
    walk.run(choice, 1, leaf);
    return out;
}

/// |Fib_MVP(pi)| without materialising the fibre.
inline std::uint64_t fibre_size(const Permutation& pi, bool prune_p2 = true, int jobs = 1) {
    struct Counter {
        detail::ValidityProbe probe;
        std::uint64_t count = 0;
        void operator()(std::span<const int> choice) { count += probe(choice) ? 1 : 0; }
    };
    std::uint64_t total = 0;
    for (const auto& leaf : detail::parallel_walk(pi, prune_p2, jobs, [&] { return Counter{detail::ValidityProbe(pi)}; }))
        total += leaf.count;
    return total;
}

inline constexpr int kDefaultBruteForceCap = 7;

/// Independent oracle: scans all of [n]^n.
inline std::vector<ParkingPreference> fibre_brute(const Permutation& pi, int cap = kDefaultBruteForceCap) {
    const int n = pi.size();
    if (n > cap) throw SizeCapExceeded("fibre_brute: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<ParkingPreference> out;
    std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
    for_each_preference(n, [&](std::span<const int> prefs) {
        if (detail::run_mvp(prefs, occupant) && std::equal(pi.word().begin(), pi.word().end(), occupant.begin() + 1))
            out.emplace_back(std::vector<int>(prefs.begin(), prefs.end()));
    });
    return out;
}

/// Every MVP fibre of size n at once, by a single scan of [n]^n.
inline std::map<Permutation, std::vector<ParkingPreference>> fibres_by_outcome(int n, int cap = kDefaultBruteForceCap) {
    if (n > cap) throw SizeCapExceeded("fibres_by_outcome: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::map<std::vector<int>, std::vector<ParkingPreference>> raw;
    std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
    for_each_preference(n, [&](std::span<const int> prefs) {
        if (detail::run_mvp(prefs, occupant))
            raw[detail::spots_to_word(occupant)].emplace_back(std::vector<int>(prefs.begin(), prefs.end()));
    });
    std::map<Permutation, std::vector<ParkingPreference>> out;
    for (auto& [word, fibre] : raw) out.emplace(Permutation(word), std::move(fibre));
    return out;
}

struct FibreBounds {
    std::uint64_t product_upper = 0;     ///< |Sub(pi)|
    std::uint64_t p2free_count = 0;      ///< P2-free 1-subgraphs
    std::uint64_t fibre_size = 0;        ///< valid 1-subgraphs
    std::uint64_t hs_count = 0;          ///< horizontally separated 1-subgraphs
    std::uint64_t single_arc_lower = 0;  ///< 1 + |Inv(pi)|

    friend bool operator==(const FibreBounds&, const FibreBounds&) = default;
};

/// single_arc_lower <= hs_count <= fibre_size <= p2free_count <= product_upper.
inline FibreBounds bounds(const Permutation& pi, int jobs = 1) {
    struct Tally {
        detail::ValidityProbe probe;
        std::vector<Arc> scratch;
        std::uint64_t p2free = 0, valid = 0, hs = 0;
        void operator()(std::span<const int> choice) {
            ++p2free;
            valid += probe(choice) ? 1 : 0;
            hs += detail::choice_is_hs(choice, scratch) ? 1 : 0;
        }
    };
    FibreBounds b;
    b.product_upper = one_subgraph_count(pi);
    b.single_arc_lower = 1 + inversions(pi).size();
    for (const auto& leaf : detail::parallel_walk(pi, true, jobs, [&] { return Tally{detail::ValidityProbe(pi), {}}; })) {
        b.p2free_count += leaf.p2free;
        b.fibre_size += leaf.valid;
        b.hs_count += leaf.hs;
    }
    return b;
}

}  // namespace mvp
