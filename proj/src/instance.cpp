#include "pathdiv/instance.hpp"

#include <vector>

namespace pathdiv {

Instance Instance::additive(std::vector<std::vector<Rational>> item_values) {
    if (item_values.empty()) throw InputError("instance needs at least one agent");
    Instance inst;
    inst.kind_ = Kind::additive;
    inst.agents_ = static_cast<int>(item_values.size());
    inst.items_ = static_cast<int>(item_values.front().size());
    if (inst.items_ < 1) throw InputError("instance needs at least one item");
    for (const auto& row : item_values) {
        if (static_cast<int>(row.size()) != inst.items_) {
            throw InputError("additive value rows must all have length m");
        }
    }
    inst.item_values_ = std::move(item_values);
    inst.prefix_.resize(inst.agents_);
    for (int i = 0; i < inst.agents_; ++i) {
        auto& pre = inst.prefix_[i];
        pre.resize(inst.items_ + 1);
        for (int g = 1; g <= inst.items_; ++g) {
            pre[g] = pre[g - 1] + inst.item_values_[i][g - 1];
        }
    }
    return inst;
}

Instance Instance::table(int agents, int items, const std::vector<TableEntry>& entries) {
    if (agents < 1) throw InputError("instance needs at least one agent");
    if (items < 1) throw InputError("instance needs at least one item");
    Instance inst;
    inst.kind_ = Kind::table;
    inst.agents_ = agents;
    inst.items_ = items;
    const int slots = items * (items + 1) / 2;
    inst.table_.assign(agents, std::vector<Rational>(slots));
    std::vector<std::vector<char>> seen(agents, std::vector<char>(slots, 0));
    for (const auto& e : entries) {
        if (e.agent < 1 || e.agent > agents) {
            throw InputError("table entry with out-of-range agent " + std::to_string(e.agent));
        }
        if (e.interval.is_empty() || e.interval.lo < 1 || e.interval.hi > items) {
            throw InputError("table entry with out-of-range interval " + e.interval.str());
        }
        const int slot = inst.table_slot(e.interval);
        if (seen[e.agent - 1][slot]) {
            throw InputError("duplicate table entry for agent " + std::to_string(e.agent) +
                             ", interval " + e.interval.str());
        }
        seen[e.agent - 1][slot] = 1;
        inst.table_[e.agent - 1][slot] = e.value;
    }
    for (int i = 0; i < agents; ++i) {
        for (int lo = 1; lo <= items; ++lo) {
            for (int hi = lo; hi <= items; ++hi) {
                if (!seen[i][inst.table_slot(Interval::make(lo, hi))]) {
                    throw InputError("table valuation missing entry for agent " +
                                     std::to_string(i + 1) + ", interval " +
                                     Interval::make(lo, hi).str());
                }
            }
        }
    }
    return inst;
}

int Instance::table_slot(const Interval& interval) const {
    // Row lo-1 starts after the (lo-1) longest rows: lengths m, m-1, ...
    const int lo = interval.lo - 1;
    return lo * items_ - lo * (lo - 1) / 2 + (interval.hi - interval.lo);
}

void Instance::check_query(int agent, const Interval& interval) const {
    if (agent < 1 || agent > agents_) {
        throw InputError("agent index " + std::to_string(agent) + " out of range");
    }
    if (!interval.is_empty() && (interval.lo < 1 || interval.hi > items_)) {
        throw InputError("interval " + interval.str() + " out of range");
    }
}

Rational Instance::value(int agent, const Interval& interval) const {
    check_query(agent, interval);
    if (interval.is_empty()) return Rational(0);
    if (kind_ == Kind::additive) {
        const auto& pre = prefix_[agent - 1];
        return pre[interval.hi] - pre[interval.lo - 1];
    }
    return table_[agent - 1][table_slot(interval)];
}

Rational Instance::up_to_one(int agent, const Interval& interval) const {
    check_query(agent, interval);
    if (interval.size() <= 1) return Rational(0);
    const Rational left = value(agent, interval.drop_leftmost());
    const Rational right = value(agent, interval.drop_rightmost());
    return left < right ? left : right;
}

const std::vector<Rational>& Instance::item_values(int agent) const {
    check_query(agent, Interval::empty());
    static const std::vector<Rational> none;
    return kind_ == Kind::additive ? item_values_[agent - 1] : none;
}

Instance::ValidationReport Instance::validate() const {
    ValidationReport report;
    if (kind_ == Kind::additive) {
        for (int i = 1; i <= agents_; ++i) {
            for (int g = 1; g <= items_; ++g) {
                if (item_values_[i - 1][g - 1].is_negative()) {
                    report.violations.push_back(
                        {i, Interval::make(g, g), "negative item value"});
                }
            }
        }
        return report;
    }
    for (int i = 1; i <= agents_; ++i) {
        for (int lo = 1; lo <= items_; ++lo) {
            for (int hi = lo; hi <= items_; ++hi) {
                const Interval cur = Interval::make(lo, hi);
                const Rational v = value(i, cur);
                if (lo == hi && v.is_negative()) {
                    report.violations.push_back({i, cur, "singleton below v(empty) = 0"});
                }
                if (lo > 1 && value(i, Interval::make(lo - 1, hi)) < v) {
                    report.violations.push_back(
                        {i, Interval::make(lo - 1, hi), "value drops when extending left"});
                }
                if (hi < items_ && value(i, Interval::make(lo, hi + 1)) < v) {
                    report.violations.push_back(
                        {i, Interval::make(lo, hi + 1), "value drops when extending right"});
                }
            }
        }
    }
    return report;
}

}  // namespace pathdiv
