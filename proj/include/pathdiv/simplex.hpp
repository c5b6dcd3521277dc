#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "pathdiv/interval.hpp"

namespace pathdiv {

// Geometry of knife configurations over a path of m items.
//
// A division of the path into n ordered bundles is induced by n-1 knives at
// half-integer or integer positions between 1/2 and m+1/2. Positions are
// stored doubled, so knife j holds an integer 2*x^j in [1, 2m+1]; an even
// value means the knife sits on an item (hiding it from both neighboring
// bundles), an odd value means it sits in a gap. All half-step arithmetic is
// integer +-1 on the doubled grid.
//
// The configuration space {1/2 <= x^1 <= ... <= x^{n-1} <= m+1/2} carries a
// triangulation whose cells are "balanced chains": n vertices obtained from a
// base vertex by advancing each knife by one half-step, one knife per step,
// each knife exactly once. Enumeration order is canonical: lexicographic by
// base vertex, then by the advance sequence.
class KnifeVector {
public:
    KnifeVector(int items, std::vector<int> doubled);

    int items() const { return items_; }
    int knives() const { return static_cast<int>(doubled_.size()); }
    int bundles() const { return knives() + 1; }

    // Doubled position of knife k, k in [1, knives]. k = 0 and k = bundles()
    // address the fixed sentinels at 1/2 and m+1/2.
    int doubled(int k) const;

    const std::vector<int>& coords() const { return doubled_; }

    // I_j: the items strictly between knives j-1 and j (hidden items belong
    // to no bundle). j in [1, bundles].
    Interval bundle(int j) const;

    // The boundary items of slot j: the leftmost and rightmost items that
    // could end up in bundle j, i.e. floor(x^{j-1} + 1/2) and ceil(x^j - 1/2).
    std::pair<int, int> boundary_items(int j) const;

    friend bool operator==(const KnifeVector&, const KnifeVector&) = default;

private:
    int items_ = 0;
    std::vector<int> doubled_;
};

using PartialDivision = std::vector<Interval>;

// All n bundles of fully visible items at x.
PartialDivision partial_division(const KnifeVector& x);

// Owner labeling: (sum of doubled positions) mod bundles, residue r mapped to
// agent r+1. One half-step raises the sum by exactly 1, so the vertices of
// any balanced chain receive consecutive residues and hence distinct owners.
int owner_label(const KnifeVector& x);

struct ElementarySimplex {
    KnifeVector base;        // lexicographically smallest vertex of the chain
    std::vector<int> steps;  // 0-based knife indices in advance order; a permutation

    int items() const { return base.items(); }
    int bundles() const { return base.bundles(); }

    // The n vertices in chain order, starting at base.
    std::vector<KnifeVector> vertices() const;

    friend bool operator==(const ElementarySimplex&, const ElementarySimplex&) = default;
};

// Reconstructs the chain from an explicit vertex list (any order not
// required: vertices are sorted by coordinate sum). Throws InputError if the
// vertices do not form a balanced chain.
ElementarySimplex simplex_from_vertices(int items, const std::vector<std::vector<int>>& vertices);

// B_j = intersection of bundle j over the chain's vertices; contested[j-1] is
// the single item y^j that knife j covers at its integer position. The y's
// are non-decreasing.
struct SimplexDecomposition {
    std::vector<Interval> fixed;  // length bundles
    std::vector<int> contested;   // length bundles-1
};
SimplexDecomposition decompose(const ElementarySimplex& simplex);

// True iff item y is fully visible in bundle j at some vertex of the chain.
bool fully_appears(const ElementarySimplex& simplex, int item, int j);

// Enumerates every elementary simplex exactly once in canonical order; the
// callback returns false to stop early. Requires items >= 1, bundles >= 1
// (a single bundle yields the one knife-less cell).
void for_each_simplex(int items, int bundles,
                      const std::function<bool(const ElementarySimplex&)>& fn);

std::uint64_t count_simplices(int items, int bundles);

// All non-decreasing tuples of `length` values over [lo, hi], lex order.
// length 0 yields the single empty tuple.
std::vector<std::vector<int>> nondecreasing_tuples(int length, int lo, int hi);

// Triangulation vertices in lex order.
std::vector<KnifeVector> all_vertices(int items, int bundles);

std::uint64_t binomial(int n, int k);

// Number of triangulation vertices: C(2m + n - 1, n - 1).
std::uint64_t vertex_count(int items, int bundles);

// Lex rank of x among all triangulation vertices; inverse of the order used
// by all_vertices. Used to key flat per-vertex caches.
std::uint64_t vertex_rank(const KnifeVector& x);

}  // namespace pathdiv
