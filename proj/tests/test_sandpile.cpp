#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace mvp;

namespace {

SandpileConfig cfg(std::vector<int> g) { return SandpileConfig(std::move(g)); }

// Recurrence by exhaustive search: some ordering of the vertices topples
// each exactly once starting from c + (1,...,1).
bool recurrent_oracle(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<int> g = c;
        for (auto& x : g) ++x;
        bool ok = true;
        for (int v : order) {
            if (g[static_cast<std::size_t>(v)] < n) {
                ok = false;
                break;
            }
            for (int w = 0; w < n; ++w) g[static_cast<std::size_t>(w)] += w == v ? -n : 1;
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Calls f on every vector in [0, n-1]^n.
template <typename F>
void for_each_stable(int n, F&& f) {
    std::vector<int> g(static_cast<std::size_t>(n), 0);
    while (true) {
        f(g);
        int k = n - 1;
        while (k >= 0 && g[static_cast<std::size_t>(k)] == n - 1) g[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
        ++g[static_cast<std::size_t>(k)];
    }
}

std::vector<int> complement(const std::vector<int>& c) {
    std::vector<int> p;
    for (int v : c) p.push_back(static_cast<int>(c.size()) - v);
    return p;
}

}  // namespace

TEST(Sandpile, ConfigValidation) {
    EXPECT_THROW(cfg({1, -1}), NegativeEntry);
    EXPECT_THROW(parse_config("1,-1"), ParseError);
    EXPECT_EQ(to_string(parse_config("2,4,3,0,1")), "2,4,3,0,1");
    EXPECT_TRUE(cfg({0, 1, 2}).is_stable());
    EXPECT_FALSE(cfg({0, 3, 2}).is_stable());
}

TEST(Sandpile, ToppleExamples) {
    EXPECT_EQ(topple(cfg({3, 0, 0}), 1), cfg({0, 1, 1}));
    EXPECT_EQ(topple(cfg({4, 1, 0}), 1), cfg({1, 2, 1}));
    EXPECT_EQ(topple(cfg({2, 5}), 2), cfg({3, 3}));
    EXPECT_THROW(topple(cfg({1, 1}), 1), VertexStable);
    EXPECT_THROW(topple(cfg({1, 1}), 3), IndexOutOfRange);
}

TEST(Sandpile, StabiliseExamples) {
    const auto stable = stabilise(cfg({0, 1, 2}));
    EXPECT_EQ(stable.config, cfg({0, 1, 2}));
    EXPECT_TRUE(stable.topplings.empty());
    const auto one = stabilise(cfg({3, 0, 0}));
    EXPECT_EQ(one.config, cfg({0, 1, 1}));
    EXPECT_EQ(one.topplings, std::vector<int>{1});
    const auto two = stabilise(cfg({2, 2}));
    EXPECT_EQ(two.config, cfg({1, 1}));
    EXPECT_EQ(two.topplings, (std::vector<int>{1, 2}));
    EXPECT_EQ(stabilise(cfg({0, 0, 0})).config, cfg({0, 0, 0}));
}

TEST(Sandpile, RecurrenceExamples) {
    EXPECT_TRUE(is_recurrent(cfg({2, 4, 3, 0, 1})));
    EXPECT_FALSE(is_recurrent(cfg({0, 0})));
    for (int n = 1; n <= 7; ++n) EXPECT_TRUE(is_recurrent(SandpileConfig(std::vector<int>(static_cast<std::size_t>(n), n - 1))));
    EXPECT_THROW(is_recurrent(cfg({2, 0})), NotStable);
}

TEST(Sandpile, GreedyBurningMatchesOrderSearch) {
    for (int n = 1; n <= 4; ++n) for_each_stable(n, [&](const std::vector<int>& c) { ASSERT_EQ(is_recurrent(SandpileConfig(c)), recurrent_oracle(c)); });
}

TEST(Sandpile, RecurrentIffComplementIsParkingFunction) {
    for (int n = 1; n <= 5; ++n)
        for_each_stable(n, [&](const std::vector<int>& c) {
            const bool parks = oracle::mvp_word(complement(c)).has_value();
            ASSERT_EQ(is_recurrent(SandpileConfig(c)), parks) << to_string(SandpileConfig(c));
        });
}

TEST(Sandpile, MinimalRecurrentExamples) {
    EXPECT_TRUE(is_min_recurrent(cfg({2, 4, 3, 0, 1})));
    for (int n = 2; n <= 6; ++n) EXPECT_FALSE(is_min_recurrent(SandpileConfig(std::vector<int>(static_cast<std::size_t>(n), n - 1))));
    std::vector<int> up(6);
    std::iota(up.begin(), up.end(), 0);
    EXPECT_TRUE(is_min_recurrent(SandpileConfig(up)));
}

TEST(Sandpile, MinimalMeansNoGrainCanBeRemoved) {
    for (int n = 1; n <= 5; ++n)
        for_each_stable(n, [&](const std::vector<int>& c) {
            if (!recurrent_oracle(c)) return;
            bool minimal = true;
            for (int v = 0; v < n && minimal; ++v) {
                if (c[static_cast<std::size_t>(v)] == 0) continue;
                auto d = c;
                --d[static_cast<std::size_t>(v)];
                minimal = !recurrent_oracle(d);
            }
            ASSERT_EQ(is_min_recurrent(SandpileConfig(c)), minimal) << to_string(SandpileConfig(c));
        });
}

TEST(Sandpile, CanonicalTopplingExamples) {
    EXPECT_EQ(canonical_toppling(cfg({2, 4, 3, 0, 1})), parse_permutation("23154"));
    EXPECT_EQ(canonical_toppling(cfg({4, 3, 2, 1, 0})), Permutation::identity(5));
    EXPECT_EQ(canonical_toppling(cfg({0, 1, 2, 3, 4})), dec(5));
    EXPECT_THROW(canonical_toppling(cfg({1, 1})), NotMinimalRecurrent);
}

TEST(Sandpile, CanonicalTopplingIsAToppleOrder) {
    for_each_permutation(5, [&](const Permutation& pi) {
        std::vector<int> g(5);
        for (int i = 1; i <= 5; ++i) g[static_cast<std::size_t>(pi(i) - 1)] = 5 - i;
        SandpileConfig c = mvp::detail::add_one_everywhere(SandpileConfig(g));
        for (int i = 1; i <= 5; ++i) {
            ASSERT_FALSE(c.is_stable(pi(i)));
            c = topple(c, pi(i));
        }
        ASSERT_EQ(canonical_toppling(SandpileConfig(g)), pi);
    });
}

TEST(Sandpile, CoriRossinExamples) {
    const auto p = cori_rossin(cfg({2, 4, 3, 0, 1}));
    EXPECT_EQ(p, parse_preference("3,1,2,5,4"));
    EXPECT_TRUE(is_parking_function(p));
    EXPECT_EQ(cori_rossin(cfg({3, 3, 3, 3})), parse_preference("1,1,1,1"));
    EXPECT_EQ(cori_rossin_inverse(parse_preference("3,1,1,2")), cfg({1, 3, 3, 2}));
    EXPECT_THROW(cori_rossin(cfg({4, 0, 0, 0})), NegativeEntry);
    for (int n = 1; n <= 5; ++n)
        for_each_parking_function(n, [&](const ParkingPreference& q) { ASSERT_EQ(cori_rossin(cori_rossin_inverse(q)), q); });
}

TEST(Sandpile, MinrecExamples) {
    const auto c = cfg({11, 9, 5, 8, 1, 9, 4, 8, 4, 9, 10, 0});
    std::vector<MinrecIteration> trace;
    EXPECT_EQ(minrec(c, &trace), cfg({11, 7, 5, 6, 1, 2, 3, 8, 4, 9, 10, 0}));
    ASSERT_GE(trace.size(), 3u);
    EXPECT_EQ(trace[0].j, 6);
    EXPECT_EQ(trace[0].i, 2);
    EXPECT_EQ(trace[0].values, (std::vector<int>{9, 8, 7}));
    EXPECT_EQ(trace[1].j, 8);
    EXPECT_EQ(trace[1].i, 4);
    EXPECT_EQ(trace[1].values, (std::vector<int>{8, 7, 6}));
    EXPECT_EQ(trace[2].j, 9);
    EXPECT_EQ(trace[2].i, 7);
    EXPECT_EQ(trace[2].values, (std::vector<int>{4, 3}));

    EXPECT_EQ(minrec(cfg({2, 4, 3, 0, 1})), cfg({2, 4, 3, 0, 1}));

    // Hand-executed: j=3 lowers c_2 from 3 to 2; then j=4 lowers c_2 past
    // c_1 = 1 to 0.
    trace.clear();
    EXPECT_EQ(minrec(cfg({1, 3, 3, 2}), &trace), cfg({1, 0, 3, 2}));
    ASSERT_EQ(trace.size(), 2u);
    EXPECT_EQ(trace[0].values, (std::vector<int>{3, 2}));
    EXPECT_EQ(trace[1].values, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(canonical_toppling(cfg({1, 0, 3, 2})), parse_permutation("3412"));

    EXPECT_THROW(minrec(cfg({0, 0})), NotRecurrent);
    EXPECT_THROW(minrec(cfg({0, 5})), NotRecurrent);
}

TEST(Sandpile, MinrecClassicalExamples) {
    EXPECT_EQ(minrec_classical(cfg({1, 3, 3, 2})), cfg({1, 3, 2, 0}));
    EXPECT_EQ(canonical_toppling(cfg({1, 3, 2, 0})), parse_permutation("2314"));
    EXPECT_EQ(minrec_classical(cfg({2, 4, 3, 0, 1})), cfg({2, 4, 3, 0, 1}));
    const auto c = cfg({11, 9, 5, 8, 1, 9, 4, 8, 4, 9, 10, 0});
    EXPECT_EQ(canonical_toppling(minrec_classical(c)), outcome_classical(cori_rossin(c)));
}

TEST(Sandpile, MvpOutcomeViaSandpileExamples) {
    EXPECT_EQ(mvp_outcome_via_asm(parse_preference("3,1,1,2")), parse_permutation("3412"));
    EXPECT_EQ(mvp_outcome_via_asm(parse_preference("1,2,3,4,5")), Permutation::identity(5));
    const auto p = cori_rossin(cfg({11, 9, 5, 8, 1, 9, 4, 8, 4, 9, 10, 0}));
    EXPECT_EQ(mvp_outcome_via_asm(p), outcome_mvp(p).outcome);
    EXPECT_EQ(canonical_toppling(cfg({11, 7, 5, 6, 1, 2, 3, 8, 4, 9, 10, 0})), outcome_mvp(p).outcome);
    EXPECT_THROW(mvp_outcome_via_asm(parse_preference("2,2")), NotAParkingFunction);
}

TEST(Sandpile, MinrecIterationsPreserveOutcomeAndShrink) {
    for (int n = 1; n <= 5; ++n)
        for_each_parking_function(n, [&](const ParkingPreference& p) {
            const SandpileConfig start = cori_rossin_inverse(p);
            std::vector<int> g(start.grains().begin(), start.grains().end());
            std::vector<int> touched(static_cast<std::size_t>(n) + 1, 0);
            const Permutation target = outcome_mvp(p).outcome;
            while (auto it = minrec_step(g)) {
                // One unit per step, stopping at the first value free among 1..j.
                for (std::size_t k = 1; k < it->values.size(); ++k) ASSERT_EQ(it->values[k], it->values[k - 1] - 1);
                ASSERT_EQ(it->decremented, it->i);
                touched[static_cast<std::size_t>(it->i)] = 1;
                ASSERT_EQ(outcome_mvp(ParkingPreference(complement(g))).outcome, target) << to_string(p);
            }
            const SandpileConfig result(g);
            ASSERT_TRUE(is_min_recurrent(result));
            ASSERT_EQ(result, minrec(start));
            for (int v = 1; v <= n; ++v) {
                ASSERT_LE(result(v), start(v));
                if (!touched[static_cast<std::size_t>(v)]) {
                    ASSERT_EQ(result(v), start(v));
                }
            }
        });
}

TEST(Sandpile, MinrecOfEveryRecurrentConfigIsMinimal) {
    for (int n = 1; n <= 5; ++n)
        for_each_stable(n, [&](const std::vector<int>& c) {
            if (!recurrent_oracle(c)) return;
            const SandpileConfig reduced = minrec(SandpileConfig(c));
            std::vector<int> sorted(reduced.grains().begin(), reduced.grains().end());
            std::sort(sorted.begin(), sorted.end());
            for (int k = 0; k < n; ++k) ASSERT_EQ(sorted[static_cast<std::size_t>(k)], k);
        });
}

TEST(Sandpile, OutcomesThroughSandpileMatchSimulation) {
    for (int n = 1; n <= 6; ++n)
        for_each_parking_function(n, [&](const ParkingPreference& p) {
            ASSERT_EQ(word_of(mvp_outcome_via_asm(p)), *oracle::mvp_word(oracle::prefs_of(p))) << to_string(p);
            ASSERT_EQ(canonical_toppling(minrec_classical(cori_rossin_inverse(p))), outcome_classical(p)) << to_string(p);
        });
}

TEST(Sandpile, StabilisationIgnoresToppleOrder) {
    std::mt19937_64 rng(20261016);
    for (int n = 1; n <= 8; ++n) {
        std::uniform_int_distribution<int> grains(0, 3 * n);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> g(static_cast<std::size_t>(n));
            for (auto& x : g) x = grains(rng);
            const SandpileConfig c(g);
            const auto reference = stabilise(c);
            ASSERT_TRUE(reference.config.is_stable());
            auto sorted_ref = reference.topplings;
            std::sort(sorted_ref.begin(), sorted_ref.end());
            for (int k = 0; k < 3; ++k) {
                auto other = stabilise_random(c, rng);
                std::sort(other.topplings.begin(), other.topplings.end());
                ASSERT_EQ(other.config, reference.config);
                ASSERT_EQ(other.topplings, sorted_ref);
            }
        }
    }
}
