#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "text.hpp"

namespace mvp {

/// Preferred spots of cars 1..n, each in [1, n].
class ParkingPreference {
public:
    ParkingPreference() = default;

    explicit ParkingPreference(std::vector<int> prefs) : prefs_(std::move(prefs)) {
        const int n = size();
        if (n < 1) throw InvalidPreference("parking preference must have length >= 1");
        for (int v : prefs_)
            if (v < 1 || v > n)
                throw InvalidPreference("preference " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }

    int size() const noexcept { return static_cast<int>(prefs_.size()); }

    /// Preferred spot of car i (1-based).
    int operator()(int car) const {
        if (car < 1 || car > size()) throw IndexOutOfRange("car " + std::to_string(car) + " outside 1.." + std::to_string(size()));
        return prefs_[static_cast<std::size_t>(car - 1)];
    }

    std::span<const int> prefs() const noexcept { return prefs_; }

    friend bool operator==(const ParkingPreference&, const ParkingPreference&) = default;
    friend auto operator<=>(const ParkingPreference&, const ParkingPreference&) = default;

private:
    std::vector<int> prefs_;
};

inline std::string to_string(const ParkingPreference& p) { return text::join_ints(p.prefs()); }

inline ParkingPreference parse_preference(std::string_view s) {
    try {
        return ParkingPreference(text::parse_int_list(s));
    } catch (const InvalidPreference& e) {
        throw ParseError(e.what());
    }
}

/// `car` was displaced from `from_spot` to `to_spot` because `bumper` took `from_spot`.
struct BumpEvent {
    int car;
    int from_spot;
    int to_spot;
    int bumper;

    friend bool operator==(const BumpEvent&, const BumpEvent&) = default;
};

struct ParkingOutcome {
    Permutation outcome;
    std::vector<BumpEvent> bump_log;
};

namespace detail {

// Both runners take 1-based spot arrays of size n+1 (index 0 unused) and
// leave the car occupying each spot there. They return false as soon as a
// car leaves the street without parking.

inline bool run_classical(std::span<const int> prefs, std::span<int> occupant) {
    const int n = static_cast<int>(prefs.size());
    std::fill(occupant.begin(), occupant.end(), 0);
    for (int car = 1; car <= n; ++car) {
        int spot = prefs[static_cast<std::size_t>(car - 1)];
        while (spot <= n && occupant[static_cast<std::size_t>(spot)] != 0) ++spot;
        if (spot > n) return false;
        occupant[static_cast<std::size_t>(spot)] = car;
    }
    return true;
}

inline bool run_mvp(std::span<const int> prefs, std::span<int> occupant, std::vector<BumpEvent>* log = nullptr) {
    const int n = static_cast<int>(prefs.size());
    std::fill(occupant.begin(), occupant.end(), 0);
    for (int car = 1; car <= n; ++car) {
        const int spot = prefs[static_cast<std::size_t>(car - 1)];
        const int previous = occupant[static_cast<std::size_t>(spot)];
        occupant[static_cast<std::size_t>(spot)] = car;
        if (previous == 0) continue;
        int next = spot + 1;
        while (next <= n && occupant[static_cast<std::size_t>(next)] != 0) ++next;
        if (next > n) return false;
        occupant[static_cast<std::size_t>(next)] = previous;
        if (log) log->push_back({previous, spot, next, car});
    }
    return true;
}

/// Sorted-prefix characterisation; used only where simulation is not required.
inline bool sorted_prefix_check(std::span<const int> prefs) {
    const int n = static_cast<int>(prefs.size());
    std::vector<int> count(static_cast<std::size_t>(n) + 2, 0);
    for (int v : prefs) {
        if (v < 1 || v > n) return false;
        ++count[static_cast<std::size_t>(v)];
    }
    int cumulative = 0;
    for (int k = 1; k <= n; ++k) {
        cumulative += count[static_cast<std::size_t>(k)];
        if (cumulative < k) return false;
    }
    return true;
}

inline std::vector<int> spots_to_word(std::span<const int> occupant) {
    return {occupant.begin() + 1, occupant.end()};
}

}  // namespace detail

/// True iff all cars park. Runs both the classical and the MVP process and
/// insists they agree.
inline bool is_parking_function(const ParkingPreference& p) {
    std::vector<int> occupant(static_cast<std::size_t>(p.size()) + 1);
    const bool classical = detail::run_classical(p.prefs(), occupant);
    const bool mvp = detail::run_mvp(p.prefs(), occupant);
    if (classical != mvp) throw std::logic_error("classical and MVP processes disagree on " + to_string(p));
    return classical;
}

inline Permutation outcome_classical(const ParkingPreference& p) {
    std::vector<int> occupant(static_cast<std::size_t>(p.size()) + 1);
    if (!detail::run_classical(p.prefs(), occupant)) throw NotAParkingFunction(to_string(p) + " is not a parking function");
    return Permutation(detail::spots_to_word(occupant));
}

/// Later car wins a collision; the displaced car drives on to the first free
/// spot after the contested one and never displaces anyone itself.
inline ParkingOutcome outcome_mvp(const ParkingPreference& p) {
    std::vector<int> occupant(static_cast<std::size_t>(p.size()) + 1);
    std::vector<BumpEvent> log;
    if (!detail::run_mvp(p.prefs(), occupant, &log)) throw NotAParkingFunction(to_string(p) + " is not a parking function");
    return {Permutation(detail::spots_to_word(occupant)), std::move(log)};
}

/// Sum over cars of |preferred spot - final spot| under the MVP rule.
inline int displacement_mvp(const ParkingPreference& p) {
    const Permutation where = outcome_mvp(p).outcome.inverse();
    int total = 0;
    for (int car = 1; car <= p.size(); ++car) total += std::abs(p(car) - where(car));
    return total;
}

/// Calls f(prefs) for every vector in [n]^n, lexicographically. The span is
/// only valid during the call.
template <typename F>
void for_each_preference(int n, F&& f) {
    std::vector<int> w(static_cast<std::size_t>(n), 1);
    while (true) {
        f(std::span<const int>(w));
        int k = n - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == n) w[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) return;
        ++w[static_cast<std::size_t>(k)];
    }
}

template <typename F>
void for_each_parking_function(int n, F&& f) {
    for_each_preference(n, [&](std::span<const int> w) {
        if (detail::sorted_prefix_check(w)) f(ParkingPreference({w.begin(), w.end()}));
    });
}

}  // namespace mvp
