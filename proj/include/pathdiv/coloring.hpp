#pragma once

#include <functional>
#include <vector>

#include "pathdiv/instance.hpp"
#include "pathdiv/simplex.hpp"

namespace pathdiv {

// Virtual valuations and vertex colorings.
//
// At a knife configuration x, agent i estimates what slot j of the eventual
// full division would be worth. The estimate is pessimistic about gaining the
// slot's left boundary item and optimistic about gaining the right one, which
// is what lets a left-to-right rounding of a balanced chain keep every
// estimate sandwiched between v and v^- of the final bundle:
//
//   j = 1:        v_i(I_1(x))
//   j = n:        v_i(I_n(x) minus its left boundary item)
//   1 < j < n:    by boundary visibility, with l = l_j(x), r = r_j(x):
//       l, r both hidden:   v^-_i(I_j(x) + {l, r})
//       l, r both visible:  v_i(I_j(x) - {l})
//       only l visible:     v^-_i(I_j(x) + {r})
//       only r visible:     v_i(I_j(x))
//
// An empty interior bundle falls into the first branch and evaluates to 0 in
// every knife configuration except one: knives j-1 and j resting on two
// distinct adjacent items, where the estimate is v^- of that hidden pair.
// That value is what the rounding sandwich needs when the left-to-right
// rounding later hands both items to slot j.
Rational virtual_value(const Instance& inst, int agent, const KnifeVector& x, int j);

// Full argmax of the virtual values over the choosable slots, ascending. A
// slot is choosable iff it has positive width (x^{j-1} < x^j, with the fixed
// sentinels at the ends); those are exactly the slots that do not degenerate
// to a face of the knife simplex, which is what keeps the coloring proper.
// Note a choosable slot can be empty of items: two knives on adjacent items
// leave a width-1 slot whose claim is the hidden boundary pair.
std::vector<int> agent_coloring(const Instance& inst, int agent, const KnifeVector& x);

// The single color of a vertex: the owner's coloring, smallest index on ties.
int aggregated_color(const Instance& inst, const KnifeVector& x);

// Properness sweep: over every triangulation vertex and every agent, no
// chosen color may point at a zero-width slot. `coloring` defaults to
// agent_coloring; tests inject faulty ones.
using ColoringFn =
    std::function<std::vector<int>(const Instance&, int agent, const KnifeVector&)>;

struct PropernessViolation {
    KnifeVector vertex;
    int agent = 0;
    int color = 0;
};
struct PropernessReport {
    std::uint64_t vertices_checked = 0;
    std::vector<PropernessViolation> violations;
    bool ok() const { return violations.empty(); }
};

PropernessReport check_properness(const Instance& inst, int bundles, ColoringFn coloring = {});

}  // namespace pathdiv
