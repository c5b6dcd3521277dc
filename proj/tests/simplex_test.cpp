#include <doctest.h>

#include <algorithm>
#include <set>

#include "pathdiv/errors.hpp"
#include "pathdiv/simplex.hpp"

using namespace pathdiv;

namespace {

// The half-step chain under the worked m=12, n=5 example: knives start at
// (3, 9/2, 8, 21/2) and advance in the order 2, 3, 4, 1.
ElementarySimplex worked_example() {
    return ElementarySimplex{KnifeVector(12, {6, 9, 16, 21}), {1, 2, 3, 0}};
}

}  // namespace

TEST_CASE("partial division splits items strictly between knives") {
    const KnifeVector x(12, {6, 9, 16, 21});  // (3, 9/2, 8, 21/2)
    const PartialDivision bundles = partial_division(x);
    REQUIRE(bundles.size() == 5);
    CHECK(bundles[0] == Interval::make(1, 2));
    CHECK(bundles[1] == Interval::make(4, 4));
    CHECK(bundles[2] == Interval::make(5, 7));
    CHECK(bundles[3] == Interval::make(9, 10));
    CHECK(bundles[4] == Interval::make(11, 12));
    // items 3 and 8 sit under knives and belong to no bundle
    for (const Interval& b : bundles) {
        CHECK_FALSE(b.contains(3));
        CHECK_FALSE(b.contains(8));
    }
}

TEST_CASE("partial division with the knife at the left sentinel") {
    const KnifeVector x(3, {1});  // n=2, x = (1/2)
    const PartialDivision bundles = partial_division(x);
    CHECK(bundles[0].is_empty());
    CHECK(bundles[1] == Interval::make(1, 3));
}

TEST_CASE("boundary items") {
    const KnifeVector x(12, {6, 9, 16, 21});
    CHECK(x.boundary_items(2) == std::pair<int, int>{3, 4});
    CHECK(x.boundary_items(3) == std::pair<int, int>{5, 8});
    CHECK(x.boundary_items(5) == std::pair<int, int>{11, 12});
}

TEST_CASE("knife vector validation") {
    CHECK_THROWS_AS(KnifeVector(3, {0}), InputError);
    CHECK_THROWS_AS(KnifeVector(3, {8}), InputError);   // above 2m+1
    CHECK_THROWS_AS(KnifeVector(3, {5, 4}), InputError);  // decreasing
}

TEST_CASE("chain enumeration matches hand counts") {
    std::vector<ElementarySimplex> simplices;
    for_each_simplex(1, 2, [&](const ElementarySimplex& s) {
        simplices.push_back(s);
        return true;
    });
    REQUIRE(simplices.size() == 2);
    CHECK(simplices[0].base.coords() == std::vector<int>{1});
    CHECK(simplices[1].base.coords() == std::vector<int>{2});

    CHECK(count_simplices(2, 2) == 4);
}

TEST_CASE("chain enumeration: canonical order, distinctness, chain invariant") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for (int items = 1; items <= 4; ++items) {
            std::set<std::vector<std::vector<int>>> seen;
            std::uint64_t count = 0;
            for_each_simplex(items, bundles, [&](const ElementarySimplex& s) {
                ++count;
                const auto verts = s.vertices();
                REQUIRE(static_cast<int>(verts.size()) == bundles);
                // consecutive vertices differ by +1 in exactly one doubled
                // coordinate, and every knife advances exactly once
                std::vector<char> moved(bundles - 1, 0);
                for (size_t v = 1; v < verts.size(); ++v) {
                    int diff_at = -1;
                    for (int k = 0; k < bundles - 1; ++k) {
                        const int d = verts[v].coords()[k] - verts[v - 1].coords()[k];
                        if (d == 0) continue;
                        REQUIRE(d == 1);
                        REQUIRE(diff_at == -1);
                        diff_at = k;
                    }
                    REQUIRE(diff_at != -1);
                    REQUIRE_FALSE(moved[diff_at]);
                    moved[diff_at] = 1;
                }
                std::vector<std::vector<int>> key;
                for (const auto& v : verts) key.push_back(v.coords());
                CHECK(seen.insert(key).second);  // exactly once
                return true;
            });
            // The cells tile the ordered region: their number equals its
            // volume in doubled coordinates, (2m)^(n-1).
            std::uint64_t volume = 1;
            for (int k = 0; k < bundles - 1; ++k) volume *= 2 * items;
            CHECK(count == volume);
        }
    }
}

TEST_CASE("owner labels") {
    CHECK(owner_label(KnifeVector(1, {1, 1})) == 3);  // n=3, x=(1/2, 1/2)
    // chain (1/2 -> 1) on one knife: labels differ
    CHECK(owner_label(KnifeVector(1, {1})) != owner_label(KnifeVector(1, {2})));
}

TEST_CASE("every chain sees all owner labels") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for (int items = 1; items <= 4; ++items) {
            for_each_simplex(items, bundles, [&](const ElementarySimplex& s) {
                std::set<int> owners;
                for (const KnifeVector& v : s.vertices()) owners.insert(owner_label(v));
                CHECK(static_cast<int>(owners.size()) == bundles);
                return true;
            });
        }
    }
}

TEST_CASE("decomposition of the worked example") {
    const auto dec = decompose(worked_example());
    CHECK(dec.fixed[0] == Interval::make(1, 2));
    CHECK(dec.fixed[1] == Interval::make(4, 4));
    CHECK(dec.fixed[2] == Interval::make(6, 7));
    CHECK(dec.fixed[3] == Interval::make(9, 10));
    CHECK(dec.fixed[4] == Interval::make(12, 12));
    CHECK(dec.contested == std::vector<int>{3, 5, 8, 11});
}

TEST_CASE("decomposition of the smallest chain") {
    // n=2, m=1, chain (1/2 -> 1)
    const ElementarySimplex s{KnifeVector(1, {1}), {0}};
    const auto dec = decompose(s);
    CHECK(dec.fixed[0].is_empty());
    CHECK(dec.fixed[1].is_empty());
    CHECK(dec.contested == std::vector<int>{1});
}

TEST_CASE("decomposition invariants over small triangulations") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for (int items = 1; items <= 4; ++items) {
            for_each_simplex(items, bundles, [&](const ElementarySimplex& s) {
                const auto dec = decompose(s);
                const auto verts = s.vertices();
                for (int j = 1; j < bundles; ++j) {
                    // contested items are ordered; equal neighbors pinch the
                    // bundle between them to nothing
                    if (j >= 2) {
                        CHECK(dec.contested[j - 2] <= dec.contested[j - 1]);
                        if (dec.contested[j - 2] == dec.contested[j - 1]) {
                            CHECK(dec.fixed[j - 1].is_empty());
                        }
                    }
                    // exactly one of the knife's two doubled values is even
                    const int lo = s.base.doubled(j);
                    CHECK((lo % 2 == 0) != ((lo + 1) % 2 == 0));
                }
                for (int j = 1; j <= bundles; ++j) {
                    for (const KnifeVector& v : verts) {
                        const Interval bundle = v.bundle(j);
                        if (dec.fixed[j - 1].is_empty()) continue;
                        CHECK(bundle.contains(dec.fixed[j - 1].lo));
                        CHECK(bundle.contains(dec.fixed[j - 1].hi));
                    }
                }
                return true;
            });
        }
    }
}

TEST_CASE("fixed items and contested items tile the path") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for_each_simplex(5, bundles, [&](const ElementarySimplex& s) {
            const auto dec = decompose(s);
            std::vector<int> hits(5 + 1, 0);
            for (const Interval& b : dec.fixed) {
                for (int g = b.lo; g <= b.hi; ++g) ++hits[g];
            }
            std::set<int> contested(dec.contested.begin(), dec.contested.end());
            for (int g = 1; g <= 5; ++g) {
                CHECK(hits[g] + (contested.count(g) ? 1 : 0) == 1);
            }
            return true;
        });
    }
}

TEST_CASE("partial divisions partition visible items") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for (int items = 1; items <= 5; ++items) {
            for (const KnifeVector& x : all_vertices(items, bundles)) {
                std::vector<int> owner_of(items + 1, 0);
                const auto bundles_at = partial_division(x);
                for (size_t j = 0; j < bundles_at.size(); ++j) {
                    for (int g = bundles_at[j].lo; g <= bundles_at[j].hi; ++g) {
                        CHECK(owner_of[g] == 0);
                        owner_of[g] = static_cast<int>(j + 1);
                    }
                }
                for (int g = 1; g <= items; ++g) {
                    bool hidden = false;
                    for (int k = 1; k <= x.knives(); ++k) {
                        if (x.doubled(k) == 2 * g) hidden = true;
                    }
                    CHECK((owner_of[g] != 0) == !hidden);
                }
            }
        }
    }
}

TEST_CASE("vertex counts and ranks") {
    for (int bundles = 2; bundles <= 4; ++bundles) {
        for (int items = 1; items <= 5; ++items) {
            const auto vertices = all_vertices(items, bundles);
            CHECK(vertices.size() == vertex_count(items, bundles));
            for (size_t i = 0; i < vertices.size(); ++i) {
                CHECK(vertex_rank(vertices[i]) == i);
            }
        }
    }
    CHECK(vertex_count(6, 4) == binomial(15, 3));
}

TEST_CASE("simplex reconstruction from vertex lists") {
    const auto original = worked_example();
    std::vector<std::vector<int>> coords;
    for (const KnifeVector& v : original.vertices()) coords.push_back(v.coords());
    std::reverse(coords.begin(), coords.end());  // any order is accepted
    const ElementarySimplex rebuilt = simplex_from_vertices(12, coords);
    CHECK(rebuilt == original);

    CHECK_THROWS_AS(simplex_from_vertices(12, {{6, 9, 16, 21}}), InputError);
    CHECK_THROWS_AS(
        simplex_from_vertices(
            12, {{6, 9, 16, 21}, {6, 11, 16, 21}, {6, 11, 17, 21}, {6, 11, 17, 22},
                 {7, 11, 17, 22}}),
        InputError);  // a knife jumps by a full step
    CHECK_THROWS_AS(
        simplex_from_vertices(
            12, {{6, 9, 16, 21}, {7, 9, 16, 21}, {8, 9, 16, 21}, {8, 10, 16, 21},
                 {8, 10, 17, 21}}),
        InputError);  // one knife advances twice
}
