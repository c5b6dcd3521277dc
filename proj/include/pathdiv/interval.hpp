#pragma once

#include <string>

#include "pathdiv/errors.hpp"

namespace pathdiv {

// A connected set of items on the path: a closed range [lo, hi] of 1-based
// positions, or the distinguished empty interval (lo > hi, canonically
// {1, 0}). The empty set counts as connected.
struct Interval {
    int lo = 1;
    int hi = 0;

    static constexpr Interval empty() { return Interval{1, 0}; }

    // Normalizing constructor: anything with lo > hi collapses to empty().
    static Interval make(int lo, int hi) {
        if (lo > hi) return empty();
        if (lo < 1) throw InternalError("interval with lo < 1");
        return Interval{lo, hi};
    }

    bool is_empty() const { return lo > hi; }
    int size() const { return is_empty() ? 0 : hi - lo + 1; }
    bool contains(int item) const { return lo <= item && item <= hi; }

    // Largest connected subsets after one endpoint removal.
    Interval drop_leftmost() const { return make(lo + 1, hi); }
    Interval drop_rightmost() const { return make(lo, hi - 1); }

    std::string str() const {
        if (is_empty()) return "{}";
        return "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval::make(a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi);
}

}  // namespace pathdiv
