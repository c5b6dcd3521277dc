#pragma once

#include <string>
#include <vector>

#include "pathdiv/interval.hpp"
#include "pathdiv/rational.hpp"

namespace pathdiv {

// A fair-division instance: n agents, m items aligned on a path, and for each
// agent an exact-rational valuation over connected item intervals. Valuations
// must be monotone (I ⊆ J implies v(I) <= v(J)) with v(empty) = 0.
//
// Agents, items and bundles are 1-based throughout the public API, matching
// the JSON formats.
//
// Instances are immutable after construction and safe to share across
// threads. Additive valuations answer interval queries from per-agent prefix
// sums; table valuations store one value per non-empty interval.
class Instance {
public:
    enum class Kind { additive, table };

    struct TableEntry {
        int agent = 0;
        Interval interval;
        Rational value;
    };

    // item_values[i-1][g-1] = agent i's value for item g. Values may be
    // negative here; validate() flags them.
    static Instance additive(std::vector<std::vector<Rational>> item_values);

    // Entries must cover every (agent, non-empty interval) pair exactly once.
    static Instance table(int agents, int items, const std::vector<TableEntry>& entries);

    int agents() const { return agents_; }
    int items() const { return items_; }
    Kind kind() const { return kind_; }

    // v_i(I). Throws InputError on out-of-range agent or interval.
    Rational value(int agent, const Interval& interval) const;

    // v^-_i(I): the up-to-one valuation. Zero for the empty interval and for
    // singletons; otherwise the smaller of the two one-sided truncations (the
    // only single-item removals that keep an interval connected).
    Rational up_to_one(int agent, const Interval& interval) const;

    // Additive item values of one agent (empty for table instances).
    const std::vector<Rational>& item_values(int agent) const;

    struct Violation {
        int agent = 0;
        Interval interval;
        std::string what;
    };
    struct ValidationReport {
        std::vector<Violation> violations;
        bool ok() const { return violations.empty(); }
    };

    // For additive specs: every item value must be >= 0. For table specs:
    // exhaustive monotonicity check of both one-item extensions of every
    // non-empty interval, plus non-negative singletons (monotonicity against
    // the empty set, whose value is fixed at 0).
    ValidationReport validate() const;

private:
    Instance() = default;

    void check_query(int agent, const Interval& interval) const;
    int table_slot(const Interval& interval) const;

    Kind kind_ = Kind::additive;
    int agents_ = 0;
    int items_ = 0;
    std::vector<std::vector<Rational>> item_values_;  // additive only
    std::vector<std::vector<Rational>> prefix_;       // additive; prefix_[i][g] = sum of items 1..g
    std::vector<std::vector<Rational>> table_;        // table only; [agent-1][slot(lo,hi)]
};

}  // namespace pathdiv
