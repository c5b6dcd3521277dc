#include "pathdiv/coloring.hpp"

#include <utility>

#include "pathdiv/errors.hpp"

namespace pathdiv {

Rational virtual_value(const Instance& inst, int agent, const KnifeVector& x, int j) {
    const int n = x.bundles();
    if (j < 1 || j > n) throw InputError("bundle index out of range");
    const Interval bundle = x.bundle(j);
    if (j == 1) return inst.value(agent, bundle);
    const auto [left, right] = x.boundary_items(j);
    if (j == n) {
        const Interval kept = bundle.contains(left) ? bundle.drop_leftmost() : bundle;
        return inst.value(agent, kept);
    }
    const bool left_visible = bundle.contains(left);
    const bool right_visible = bundle.contains(right);
    // A hidden boundary item sits directly outside the bundle, so each union
    // below is again an interval. An empty bundle lands in the first branch:
    // the estimate is then v^- of the hidden boundary items alone, which is 0
    // unless the two knives rest on distinct adjacent items. Collapsing that
    // last configuration to 0 as well would break the rounding sandwich
    // (the up-to-one value of a final bundle {y^{j-1}, y^j} can be positive).
    if (!left_visible && !right_visible) {
        return inst.up_to_one(agent, Interval::make(left, right));
    }
    if (left_visible && right_visible) {
        return inst.value(agent, bundle.drop_leftmost());
    }
    if (left_visible) {
        return inst.up_to_one(agent, Interval::make(bundle.lo, right));
    }
    return inst.value(agent, bundle);
}

std::vector<int> agent_coloring(const Instance& inst, int agent, const KnifeVector& x) {
    std::vector<int> best;
    Rational best_value;
    for (int j = 1; j <= x.bundles(); ++j) {
        // Only slots of positive width are choosable. Zero-width slots are
        // exactly the faces of the knife simplex, which properness must
        // avoid; a positive-width slot may still hold no item (two knives on
        // adjacent items) yet carries a real claim on its boundary pair.
        if (x.doubled(j - 1) == x.doubled(j)) continue;
        const Rational v = virtual_value(inst, agent, x, j);
        if (best.empty() || best_value < v) {
            best.assign(1, j);
            best_value = v;
        } else if (v == best_value) {
            best.push_back(j);
        }
    }
    if (best.empty()) {
        throw InternalError("coloring undefined: every slot has zero width");
    }
    return best;
}

int aggregated_color(const Instance& inst, const KnifeVector& x) {
    return agent_coloring(inst, owner_label(x), x).front();
}

PropernessReport check_properness(const Instance& inst, int bundles, ColoringFn coloring) {
    if (!coloring) coloring = agent_coloring;
    PropernessReport report;
    for (const KnifeVector& x : all_vertices(inst.items(), bundles)) {
        ++report.vertices_checked;
        for (int agent = 1; agent <= inst.agents(); ++agent) {
            for (int color : coloring(inst, agent, x)) {
                if (x.doubled(color - 1) == x.doubled(color)) {
                    report.violations.push_back({x, agent, color});
                }
            }
        }
    }
    return report;
}

}  // namespace pathdiv
