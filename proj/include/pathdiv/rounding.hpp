#pragma once

#include <string>
#include <vector>

#include "pathdiv/instance.hpp"
#include "pathdiv/simplex.hpp"

namespace pathdiv {

// A full division: n connected bundles, left to right, partitioning [1, m].
// Empty bundles are allowed anywhere.
struct Division {
    std::vector<Interval> bundles;

    int size() const { return static_cast<int>(bundles.size()); }
    const Interval& bundle(int j) const { return bundles[j - 1]; }

    friend bool operator==(const Division&, const Division&) = default;
};

// Throws InputError unless the bundles are ordered, disjoint, connected and
// cover the path exactly.
void check_division(const Division& division, int items);

// Rounds a balanced chain into a full division. Each slot keeps its fixed
// items B_j; each contested item y^j then goes to the left slot j when it was
// ever fully visible there, or when slot j lost y^{j-1} and no single vertex
// pins slot j down to exactly B_j (both knives strictly inside); otherwise
// y^j falls to slot j+1. Left slots win ties, which matches the
// left-pessimistic virtual values. Instance-independent.
Division round_simplex(const ElementarySimplex& simplex);

// The m < n fallback: singletons {1}..{m} followed by empty bundles. Every
// bundle has up-to-one value zero, so the identity assignment certifies it.
Division trivial_division(int agents, int items);

// Sandwich check: for every agent i, slot j and chain vertex x_k,
//   v_i(I*_j) >= virtual_value(i, x_k, j) >= v^-_i(I*_j).
// Violations carry the slot's shape class for diagnosis.
struct SandwichViolation {
    int agent = 0;
    int slot = 0;
    int vertex = 0;  // chain position, 0-based
    std::string shape;
    Rational bundle_value;
    Rational virtual_value;
    Rational up_to_one;
};
struct SandwichReport {
    std::vector<SandwichViolation> violations;
    bool ok() const { return violations.empty(); }
};

SandwichReport sandwich_check(const Instance& inst, const ElementarySimplex& simplex,
                            const Division& division);

}  // namespace pathdiv
