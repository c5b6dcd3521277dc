#include "pathdiv/rounding.hpp"

#include "pathdiv/coloring.hpp"
#include "pathdiv/errors.hpp"

namespace pathdiv {
namespace {

Interval append_item(const Interval& interval, int item) {
    if (interval.is_empty()) return Interval::make(item, item);
    if (item != interval.hi + 1) throw InternalError("non-adjacent append in rounding");
    return Interval::make(interval.lo, item);
}

Interval prepend_item(const Interval& interval, int item) {
    if (interval.is_empty()) return Interval::make(item, item);
    if (item != interval.lo - 1) throw InternalError("non-adjacent prepend in rounding");
    return Interval::make(item, interval.hi);
}

// True if some vertex has knife j-1 just right of y^{j-1} and knife j just
// left of y^j, i.e. slot j collapses to exactly B_j there.
bool has_pinching_vertex(const ElementarySimplex& simplex, int j, int y_prev, int y_cur) {
    std::vector<int> cur = simplex.base.coords();
    auto pinched = [&](const std::vector<int>& c) {
        return c[j - 2] == 2 * y_prev + 1 && c[j - 1] == 2 * y_cur - 1;
    };
    if (pinched(cur)) return true;
    for (int knife : simplex.steps) {
        ++cur[knife];
        if (pinched(cur)) return true;
    }
    return false;
}

}  // namespace

void check_division(const Division& division, int items) {
    if (division.bundles.empty()) throw InputError("division needs at least one bundle");
    int next = 1;
    for (const Interval& bundle : division.bundles) {
        if (bundle.is_empty()) continue;
        if (bundle.lo != next) {
            throw InputError("division bundles must tile the path left to right");
        }
        next = bundle.hi + 1;
    }
    if (next != items + 1) throw InputError("division does not cover all items");
}

Division round_simplex(const ElementarySimplex& simplex) {
    const int n = simplex.bundles();
    const int m = simplex.items();
    const auto dec = decompose(simplex);
    const auto& y = dec.contested;
    Division out;
    out.bundles.assign(n, Interval::empty());

    std::vector<char> allocated(m + 1, 0);
    auto finalize = [&](int j, const Interval& bundle) {
        out.bundles[j - 1] = bundle;
        for (int g = bundle.lo; g <= bundle.hi; ++g) allocated[g] = 1;
    };

    if (n == 1) {
        finalize(1, Interval::make(1, m));
        check_division(out, m);
        return out;
    }

    Interval first = dec.fixed[0];
    if (fully_appears(simplex, y[0], 1)) first = append_item(first, y[0]);
    finalize(1, first);

    for (int j = 2; j <= n - 1; ++j) {
        Interval bundle = dec.fixed[j - 1];
        const int y_prev = y[j - 2];
        const int y_cur = y[j - 1];
        const bool prev_taken_left = allocated[y_prev] != 0;
        if (!prev_taken_left) bundle = prepend_item(bundle, y_prev);
        if (y_prev != y_cur) {
            const bool ever_visible_here = fully_appears(simplex, y_cur, j);
            const bool compensate = prev_taken_left &&
                                    !has_pinching_vertex(simplex, j, y_prev, y_cur);
            if (ever_visible_here || compensate) bundle = append_item(bundle, y_cur);
        }
        finalize(j, bundle);
    }

    Interval last = dec.fixed[n - 1];
    if (!allocated[y[n - 2]]) last = prepend_item(last, y[n - 2]);
    finalize(n, last);

    check_division(out, m);
    return out;
}

Division trivial_division(int agents, int items) {
    if (items < 1) throw InputError("division needs at least one item");
    if (items >= agents) throw InputError("trivial division applies only when m < n");
    Division out;
    out.bundles.assign(agents, Interval::empty());
    for (int g = 1; g <= items; ++g) out.bundles[g - 1] = Interval::make(g, g);
    return out;
}

SandwichReport sandwich_check(const Instance& inst, const ElementarySimplex& simplex,
                            const Division& division) {
    const int n = simplex.bundles();
    const auto dec = decompose(simplex);
    const auto verts = simplex.vertices();
    auto shape_of = [&](int j) -> std::string {
        if (j == 1) return "left exterior";
        if (j == n) return "right exterior";
        if (dec.contested[j - 2] == dec.contested[j - 1]) return "interior, equal boundaries";
        const bool got_prev = division.bundle(j).contains(dec.contested[j - 2]);
        const bool got_cur = division.bundle(j).contains(dec.contested[j - 1]);
        if (got_prev && got_cur) return "interior, both boundary items";
        if (got_prev) return "interior, left boundary item only";
        if (got_cur) return "interior, right boundary item only";
        return "interior, fixed items only";
    };
    SandwichReport report;
    for (int agent = 1; agent <= inst.agents(); ++agent) {
        for (int j = 1; j <= n; ++j) {
            const Rational v = inst.value(agent, division.bundle(j));
            const Rational v_minus = inst.up_to_one(agent, division.bundle(j));
            for (int k = 0; k < static_cast<int>(verts.size()); ++k) {
                const Rational estimate = virtual_value(inst, agent, verts[k], j);
                if (estimate <= v && v_minus <= estimate) continue;
                report.violations.push_back(
                    {agent, j, k, shape_of(j), v, estimate, v_minus});
            }
        }
    }
    return report;
}

}  // namespace pathdiv
