#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "text.hpp"

namespace mvp {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based at the interface: `pi(i)` is the value in position i.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        const int n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : word_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw InvalidPermutation("not a permutation of 1.." + std::to_string(n) + ": " +
                                         text::join_ints(word_));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        if (n < 1) throw InvalidSize("identity: n must be >= 1");
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(unchecked, std::move(w));
    }

    int size() const noexcept { return static_cast<int>(word_.size()); }

    int operator()(int i) const {
        if (i < 1 || i > size()) throw IndexOutOfRange("position " + std::to_string(i) + " outside 1.." + std::to_string(size()));
        return word_[static_cast<std::size_t>(i - 1)];
    }

    std::span<const int> word() const noexcept { return word_; }

    /// inverse()(v) is the position holding value v.
    Permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
        return Permutation(unchecked, std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};
    Permutation(unchecked_t, std::vector<int> word) : word_(std::move(word)) {}

    std::vector<int> word_;
};

/// Digit string for n <= 9 ("3412"), comma-separated otherwise.
inline std::string to_string(const Permutation& pi) {
    if (pi.size() <= 9) {
        std::string s;
        for (int v : pi.word()) s += static_cast<char>('0' + v);
        return s;
    }
    return text::join_ints(pi.word());
}

/// Accepts both "3412" and "3,4,1,2".
inline Permutation parse_permutation(std::string_view s) {
    s = text::trim(s);
    if (s.empty()) throw ParseError("empty permutation");
    std::vector<int> w;
    if (s.find(',') != std::string_view::npos) {
        w = text::parse_int_list(s);
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw ParseError("bad permutation digit in '" + std::string(s) + "'");
            w.push_back(ch - '0');
        }
    }
    try {
        return Permutation(std::move(w));
    } catch (const InvalidPermutation& e) {
        throw ParseError(e.what());
    }
}

// Named families.

inline Permutation dec(int n) {
    if (n < 1) throw InvalidSize("dec: n must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

/// (n+1)(n+2)...(n+m) 1 2 ... n; inversion graph K_{m,n}.
inline Permutation bipart(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSize("bipart: m and n must be >= 1");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m + n));
    for (int k = 1; k <= m; ++k) w.push_back(n + k);
    for (int k = 1; k <= n; ++k) w.push_back(k);
    return Permutation(std::move(w));
}

/// (n+1)...(n+m) n (n-1) ... 1
inline Permutation split_right(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSize("split_right: m and n must be >= 1");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m + n));
    for (int k = 1; k <= m; ++k) w.push_back(n + k);
    for (int k = n; k >= 1; --k) w.push_back(k);
    return Permutation(std::move(w));
}

/// (m+n)(m+n-1)...(m+1) 1 2 ... m
inline Permutation split_left(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSize("split_left: m and n must be >= 1");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m + n));
    for (int k = m + n; k > m; --k) w.push_back(k);
    for (int k = 1; k <= m; ++k) w.push_back(k);
    return Permutation(std::move(w));
}

/// Calls f(pi) for every pi in S_n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        f(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace mvp
