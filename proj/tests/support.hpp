#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "mvp/mvp.hpp"

// gtest printers so failures show readable values.
namespace mvp {
inline void PrintTo(const Permutation& pi, std::ostream* os) { *os << to_string(pi); }
inline void PrintTo(const ParkingPreference& p, std::ostream* os) { *os << "(" << to_string(p) << ")"; }
inline void PrintTo(const ArcSet& s, std::ostream* os) { *os << "{" << to_string(s) << "}"; }
inline void PrintTo(const SandpileConfig& c, std::ostream* os) { *os << "[" << to_string(c) << "]"; }
inline void PrintTo(const LatticePath& path, std::ostream* os) { *os << to_string(path); }
inline void PrintTo(const BumpEvent& e, std::ostream* os) {
    *os << "car " << e.car << " " << e.from_spot << "->" << e.to_spot << " by " << e.bumper;
}
}  // namespace mvp

inline std::vector<int> word_of(const mvp::Permutation& pi) { return {pi.word().begin(), pi.word().end()}; }

namespace oracle {

// Straightforward MVP simulation over a spot->car map; returns the outcome
// word or nullopt if some car leaves the street.
inline std::optional<std::vector<int>> mvp_word(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::map<int, int> parked;
    for (int car = 1; car <= n; ++car) {
        const int want = p[static_cast<std::size_t>(car - 1)];
        int homeless = car;
        int s = want;
        if (auto hit = parked.find(want); hit != parked.end()) {
            homeless = hit->second;
            hit->second = car;
            s = want + 1;
        }
        while (parked.count(s)) ++s;
        if (s > n) return std::nullopt;
        parked[s] = homeless;
    }
    std::vector<int> word;
    for (const auto& [spot, c] : parked) word.push_back(c);
    return word;
}

inline std::vector<int> prefs_of(const mvp::ParkingPreference& p) { return {p.prefs().begin(), p.prefs().end()}; }

}  // namespace oracle
