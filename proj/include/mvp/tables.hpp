#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "report.hpp"
#include "subgraph.hpp"

namespace mvp {

/// Default feasibility guards for the table builders.
struct TableGuards {
    static constexpr int bounds_max_n = 9;
    static constexpr int bipartite_max = 7;
    static constexpr int dec_vs_split_max_n = 11;
    static constexpr int conjecture_max_n = 7;
};

namespace detail {

class WallClock {
public:
    std::string seconds() const {
        const auto dt = std::chrono::steady_clock::now() - start_;
        return std::to_string(std::chrono::duration<double>(dt).count());
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Cell cell(std::uint64_t v) { return Cell(static_cast<std::int64_t>(v)); }

}  // namespace detail

/// Bounds on |Fib(dec(n))| for n = 1..max_n: all 1-subgraphs, P2-free,
/// valid, HS.
inline ReportTable bounds_table(int max_n, int jobs = 1) {
    detail::WallClock clock;
    ReportTable t{"bounds", {"n", "one_subgraphs", "p2_free", "valid", "hs"}, {}, {}};
    for (int n = 1; n <= max_n; ++n) {
        const FibreBounds b = bounds(dec(n), jobs);
        t.add_row({Cell(std::int64_t{n}), detail::cell(b.product_upper), detail::cell(b.p2free_count), detail::cell(b.fibre_size),
                   detail::cell(b.hs_count)});
    }
    t.metadata = {{"permutation", "dec(n)"}, {"max_n", std::to_string(max_n)}, {"pruning", "p2-free"}, {"wall_time_s", clock.seconds()}};
    return t;
}

/// |Fib(bipart(m, n))|, one row per n and one column per m.
inline ReportTable bipartite_table(int max_m, int max_n, int jobs = 1) {
    detail::WallClock clock;
    ReportTable t{"bipartite", {"n"}, {}, {}};
    for (int m = 1; m <= max_m; ++m) t.headers.push_back("m=" + std::to_string(m));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Cell> row{Cell(std::int64_t{n})};
        for (int m = 1; m <= max_m; ++m) row.push_back(detail::cell(fibre_size(bipart(m, n), true, jobs)));
        t.add_row(std::move(row));
    }
    t.metadata = {{"permutation", "bipart(m,n)"}, {"max_m", std::to_string(max_m)}, {"max_n", std::to_string(max_n)},
                  {"pruning", "p2-free"}, {"wall_time_s", clock.seconds()}};
    return t;
}

/// |Fib(dec(n))| against |Fib(split_right(2, n-2))| for n = 3..max_n.
inline ReportTable dec_vs_split_table(int max_n, int jobs = 1) {
    detail::WallClock clock;
    ReportTable t{"dec-vs-split", {"n", "dec", "split"}, {}, {}};
    for (int n = 3; n <= max_n; ++n)
        t.add_row({Cell(std::int64_t{n}), detail::cell(fibre_size(dec(n), true, jobs)), detail::cell(fibre_size(split_right(2, n - 2), true, jobs))});
    t.metadata = {{"split", "split_right(2,n-2)"}, {"max_n", std::to_string(max_n)}, {"pruning", "p2-free"}, {"wall_time_s", clock.seconds()}};
    return t;
}

struct LargestFibres {
    int n = 0;
    std::uint64_t max_size = 0;
    std::vector<Permutation> argmax;
};

/// Scans all of S_n for the largest MVP fibres.
inline LargestFibres largest_fibres(int n, int jobs = 1) {
    LargestFibres out{n, 0, {}};
    for_each_permutation(n, [&](const Permutation& pi) {
        const std::uint64_t size = fibre_size(pi, true, jobs);
        if (size > out.max_size) {
            out.max_size = size;
            out.argmax.clear();
        }
        if (size == out.max_size) out.argmax.push_back(pi);
    });
    return out;
}

/// Largest-fibre data for n = 3..max_n, exhaustive over S_n, next to the
/// fibre sizes of split_right(2, n-2) and dec(n).
inline ReportTable conjecture_table(int max_n, int jobs = 1) {
    detail::WallClock clock;
    ReportTable t{"conjecture", {"n", "max_fibre", "argmax_count", "argmax", "split_right_fibre", "split_right_is_argmax", "dec_fibre"}, {}, {}};
    for (int n = 3; n <= max_n; ++n) {
        const LargestFibres best = largest_fibres(n, jobs);
        const Permutation split = split_right(2, n - 2);
        std::string names;
        bool split_is_max = false;
        for (const auto& pi : best.argmax) {
            if (!names.empty()) names += ' ';
            names += to_string(pi);
            split_is_max = split_is_max || pi == split;
        }
        t.add_row({Cell(std::int64_t{n}), detail::cell(best.max_size), detail::cell(best.argmax.size()), Cell(names),
                   detail::cell(fibre_size(split, true, jobs)), Cell(std::int64_t{split_is_max ? 1 : 0}), detail::cell(fibre_size(dec(n), true, jobs))});
    }
    t.metadata = {{"scope", "exhaustive over S_n"}, {"max_n", std::to_string(max_n)}, {"pruning", "p2-free"}, {"wall_time_s", clock.seconds()}};
    return t;
}

}  // namespace mvp
