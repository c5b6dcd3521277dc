#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathdiv/coloring.hpp"
#include "pathdiv/generator.hpp"

using namespace pathdiv;

namespace {

Instance additive_ints(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<std::vector<Rational>> values;
    for (auto& row : rows) values.emplace_back(row.begin(), row.end());
    return Instance::additive(std::move(values));
}

}  // namespace

TEST_CASE("virtual values on the worked m=12 vertex") {
    // agent values chosen so the four case branches give distinct numbers
    const Instance inst = additive_ints({{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048}});
    const KnifeVector x(12, {6, 9, 16, 21});  // (3, 9/2, 8, 21/2)

    // left exterior: the visible items only
    CHECK(virtual_value(inst, 1, x, 1) == inst.value(1, Interval::make(1, 2)));
    // slot 3: left boundary item 5 visible, right boundary item 8 hidden
    CHECK(virtual_value(inst, 1, x, 3) == inst.up_to_one(1, Interval::make(5, 8)));
    CHECK(virtual_value(inst, 1, x, 3) == Rational(16 + 32 + 64));
    // right exterior: never expect the left boundary item 11
    CHECK(virtual_value(inst, 1, x, 5) == inst.value(1, Interval::make(12, 12)));
    // slot 2: both boundary items (3 and 4) straddle a hidden/visible mix
    CHECK(virtual_value(inst, 1, x, 2) == inst.value(1, Interval::make(4, 4)));
}

TEST_CASE("virtual value of an empty interior bundle is zero") {
    const Instance inst = additive_ints({{5, 5, 5, 5, 5}, {5, 5, 5, 5, 5}, {5, 5, 5, 5, 5}});
    const KnifeVector x(5, {9, 9});  // both knives at 9/2: slot 2 is empty
    CHECK(x.bundle(2).is_empty());
    CHECK(virtual_value(inst, 2, x, 2) == Rational(0));
}

TEST_CASE("virtual value cases with both boundary items visible") {
    const Instance inst = additive_ints({{1, 2, 4, 8, 16}});
    const KnifeVector x(5, {3, 9});  // (3/2, 9/2): slot 2 = {2,3,4}, l=2, r=4 visible
    CHECK(virtual_value(inst, 1, x, 2) == inst.value(1, Interval::make(3, 4)));
    const KnifeVector y(5, {4, 10});  // (2, 5): slot 2 = {3,4}, l=2 and r=5 hidden
    CHECK(virtual_value(inst, 1, y, 2) == inst.up_to_one(1, Interval::make(2, 5)));
    const KnifeVector z(5, {3, 10});  // (3/2, 5): slot 2 = {2,3,4}, only l visible
    CHECK(virtual_value(inst, 1, z, 2) == inst.up_to_one(1, Interval::make(2, 5)));
    const KnifeVector w(5, {4, 9});  // (2, 9/2): slot 2 = {3,4}, only r visible
    CHECK(virtual_value(inst, 1, w, 2) == inst.value(1, Interval::make(3, 4)));
}

TEST_CASE("coloring basics") {
    // all item values zero: every non-empty slot ties for best
    const Instance zeros = additive_ints({{0, 0, 0}, {0, 0, 0}});
    const KnifeVector mid(3, {3});  // ( {1}, {2,3} )
    CHECK(agent_coloring(zeros, 1, mid) == std::vector<int>{1, 2});

    // n=2, m=2, values (1,1), x=(1/2): slot 1 empty, slot 2 keeps only item 2
    const Instance ones = additive_ints({{1, 1}, {1, 1}});
    const KnifeVector left(2, {1});
    CHECK(agent_coloring(ones, 1, left) == std::vector<int>{2});

    // an agent valuing only item 1 picks slot 1 whenever item 1 is visible there
    const Instance first_only = additive_ints({{1, 0, 0, 0}});
    for (const KnifeVector& x : all_vertices(4, 2)) {
        if (x.bundle(1).contains(1)) {
            const auto colors = agent_coloring(first_only, 1, x);
            CHECK(std::find(colors.begin(), colors.end(), 1) != colors.end());
        }
    }
}

TEST_CASE("aggregated color is deterministic and owned") {
    const Instance inst = generate_additive(3, 3, 6, 10);
    for (const KnifeVector& x : all_vertices(6, 3)) {
        const int color = aggregated_color(inst, x);
        CHECK(color == aggregated_color(inst, x));
        const auto owners_colors = agent_coloring(inst, owner_label(x), x);
        CHECK(color == owners_colors.front());
        CHECK_FALSE(x.bundle(color).is_empty());
    }
    // all-zero valuations with every bundle non-empty: smallest index wins
    const Instance zeros = additive_ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    const KnifeVector spread(3, {3, 5});  // ({1},{2},{3})
    CHECK(aggregated_color(zeros, spread) == 1);
}

TEST_CASE("virtual values only depend on items near the slot") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const int m = 5 + static_cast<int>(rng() % 4);
        const int n = 2 + static_cast<int>(rng() % 3);
        if (m < n) continue;
        const auto vertices = all_vertices(m, n);
        const KnifeVector& x = vertices[rng() % vertices.size()];
        const int j = 1 + static_cast<int>(rng() % n);
        std::vector<std::vector<Rational>> base(1);
        for (int g = 0; g < m; ++g) base[0].emplace_back(static_cast<std::int64_t>(rng() % 10));
        const Instance before = Instance::additive(base);
        const Rational expected = virtual_value(before, 1, x, j);
        // clobber values outside [l_j, r_j]
        const auto [l, r] = x.boundary_items(j);
        auto mutated = base;
        bool changed = false;
        for (int g = 1; g <= m; ++g) {
            if (g < l || g > r) {
                mutated[0][g - 1] = Rational(static_cast<std::int64_t>(rng() % 1000));
                changed = true;
            }
        }
        if (!changed) continue;
        const Instance after = Instance::additive(mutated);
        CHECK(virtual_value(after, 1, x, j) == expected);
    }
}

TEST_CASE("virtual value never exceeds the widest realizable slot") {
    const Instance inst = generate_additive(5, 3, 6, 10);
    for (const KnifeVector& x : all_vertices(6, 3)) {
        for (int agent = 1; agent <= 3; ++agent) {
            for (int j = 1; j <= 3; ++j) {
                const auto [l, r] = x.boundary_items(j);
                if (l > r) {
                    CHECK(virtual_value(inst, agent, x, j) == Rational(0));
                    continue;
                }
                CHECK(virtual_value(inst, agent, x, j) <=
                      inst.value(agent, Interval::make(l, r)));
            }
        }
    }
}

TEST_CASE("an empty slot between knives on adjacent items claims their pair") {
    // Knives on items 2 and 3: slot 2 holds no item but spans both hidden
    // boundary items, so its estimate is the up-to-one value of {2, 3}.
    const Instance inst = additive_ints({{1, 5, 7, 2}});
    const KnifeVector x(4, {4, 6});
    CHECK(x.bundle(2).is_empty());
    CHECK(virtual_value(inst, 1, x, 2) == inst.up_to_one(1, Interval::make(2, 3)));
    CHECK(virtual_value(inst, 1, x, 2) == Rational(5));
    // zero-width slots stay worthless and unchoosable
    const KnifeVector y(4, {4, 4});
    CHECK(virtual_value(inst, 1, y, 2) == Rational(0));
    const auto colors = agent_coloring(inst, 1, y);
    CHECK(std::find(colors.begin(), colors.end(), 2) == colors.end());
}

TEST_CASE("properness sweep accepts the argmax coloring") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Instance inst = generate_additive(seed, 3, 3, 10);
        const auto report = check_properness(inst, 3);
        CHECK(report.ok());
        CHECK(report.vertices_checked == vertex_count(3, 3));
    }
}

TEST_CASE("properness sweep flags a faulty coloring") {
    const Instance inst = generate_additive(1, 2, 3, 10);
    const auto faulty = [](const Instance&, int, const KnifeVector&) {
        return std::vector<int>{1};  // even when bundle 1 is empty
    };
    const auto report = check_properness(inst, 2, faulty);
    CHECK_FALSE(report.ok());
    for (const auto& v : report.violations) {
        CHECK(v.color == 1);
        CHECK(v.vertex.bundle(1).is_empty());
    }
}
