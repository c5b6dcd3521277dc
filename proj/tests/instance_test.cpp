#include <doctest.h>

#include <random>

#include "pathdiv/errors.hpp"
#include "pathdiv/generator.hpp"
#include "pathdiv/instance.hpp"
#include "pathdiv/json_io.hpp"

using namespace pathdiv;

namespace {

Instance additive_ints(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<std::vector<Rational>> values;
    for (auto& row : rows) {
        values.emplace_back(row.begin(), row.end());
    }
    return Instance::additive(std::move(values));
}

}  // namespace

TEST_CASE("interval values of an additive instance") {
    const Instance inst = additive_ints({{1, 5, 2, 3}});
    CHECK(inst.value(1, Interval::make(2, 3)) == Rational(7));
    CHECK(inst.value(1, Interval::empty()) == Rational(0));
    CHECK(inst.value(1, Interval::make(1, 4)) == Rational(11));
    CHECK_THROWS_AS(inst.value(2, Interval::make(1, 1)), InputError);
    CHECK_THROWS_AS(inst.value(1, Interval::make(1, 5)), InputError);
}

TEST_CASE("up-to-one value takes the cheaper endpoint removal") {
    const Instance inst = additive_ints({{0, 0, 0, 1, 5, 2, 0}});
    CHECK(inst.up_to_one(1, Interval::empty()) == Rational(0));
    CHECK(inst.up_to_one(1, Interval::make(4, 4)) == Rational(0));
    // {4..6}: dropping 4 leaves 7, dropping 6 leaves 6.
    CHECK(inst.up_to_one(1, Interval::make(4, 6)) == Rational(6));
}

TEST_CASE("up-to-one agrees with enumerating connectivity-preserving removals") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int m = 2 + static_cast<int>(rng() % 7);
        const Instance inst = generate_additive(rng(), 1, m, 9);
        const int lo = 1 + static_cast<int>(rng() % m);
        const int hi = lo + static_cast<int>(rng() % (m - lo + 1));
        const Interval interval = Interval::make(lo, hi);
        Rational best;
        bool found = false;
        for (int g = lo; g <= hi; ++g) {
            if (g != lo && g != hi) continue;  // interior removals disconnect
            Interval rest = (g == lo) ? interval.drop_leftmost() : interval.drop_rightmost();
            const Rational v = inst.value(1, rest);
            if (!found || v < best) {
                best = v;
                found = true;
            }
        }
        if (interval.size() == 1) best = Rational(0);
        CHECK(inst.up_to_one(1, interval) == best);
    }
}

TEST_CASE("monotone instances satisfy v >= v^- >= 0") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Instance inst = generate_additive(seed, 3, 6, 10);
        for (int agent = 1; agent <= 3; ++agent) {
            for (int lo = 1; lo <= 6; ++lo) {
                for (int hi = lo; hi <= 6; ++hi) {
                    const Interval interval = Interval::make(lo, hi);
                    const Rational v = inst.value(agent, interval);
                    const Rational vm = inst.up_to_one(agent, interval);
                    CHECK(vm <= v);
                    CHECK(Rational(0) <= vm);
                }
            }
        }
    }
}

TEST_CASE("validation of additive instances") {
    CHECK(additive_ints({{1, 0, 3}}).validate().ok());
    const auto report = additive_ints({{1, -2, 3}}).validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().agent == 1);
    CHECK(report.violations.front().interval == Interval::make(2, 2));
}

TEST_CASE("validation of table instances catches monotonicity breaks") {
    std::vector<Instance::TableEntry> entries = {
        {1, Interval::make(1, 1), Rational(4)},
        {1, Interval::make(2, 2), Rational(1)},
        {1, Interval::make(1, 2), Rational(2)},  // below v({1})
    };
    const Instance inst = Instance::table(1, 2, entries);
    const auto report = inst.validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().interval == Interval::make(1, 2));

    entries[2].value = Rational(5);
    CHECK(Instance::table(1, 2, entries).validate().ok());
}

TEST_CASE("table instances must cover every interval") {
    std::vector<Instance::TableEntry> entries = {
        {1, Interval::make(1, 1), Rational(1)},
        {1, Interval::make(2, 2), Rational(1)},
    };
    CHECK_THROWS_AS(Instance::table(1, 2, entries), InputError);
    entries.push_back({1, Interval::make(1, 2), Rational(2)});
    entries.push_back({1, Interval::make(1, 2), Rational(2)});
    CHECK_THROWS_AS(Instance::table(1, 2, entries), InputError);  // duplicate
}

TEST_CASE("instance JSON round-trip and strictness") {
    const char* text = R"({
        "n": 2, "m": 3,
        "valuations": {"type": "additive", "values": [[1, "1/2", 0], [2, 2, "3/4"]]}
    })";
    const Instance inst = instance_from_json(Json::parse(text));
    CHECK(inst.agents() == 2);
    CHECK(inst.items() == 3);
    CHECK(inst.value(1, Interval::make(1, 2)) == Rational(3, 2));
    CHECK(inst.value(2, Interval::make(3, 3)) == Rational(3, 4));
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(back.value(1, Interval::make(1, 3)) == inst.value(1, Interval::make(1, 3)));

    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 1, "m": 1,
        "valuations": {"type": "additive", "values": [[1]]}, "extra": 0})")),
                    InputError);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 1, "m": 1,
        "valuations": {"type": "additive", "values": [[1]], "junk": 1}})")),
                    InputError);
    CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"n": 1, "m": 2,
        "valuations": {"type": "additive", "values": [[1]]}})")),
                    InputError);
}

TEST_CASE("table instance JSON") {
    const char* text = R"({
        "n": 1, "m": 2,
        "valuations": {"type": "table", "entries": [
            {"agent": 1, "lo": 1, "hi": 1, "value": 1},
            {"agent": 1, "lo": 2, "hi": 2, "value": 2},
            {"agent": 1, "lo": 1, "hi": 2, "value": "5/2"}
        ]}
    })";
    const Instance inst = instance_from_json(Json::parse(text));
    CHECK(inst.kind() == Instance::Kind::table);
    CHECK(inst.value(1, Interval::make(1, 2)) == Rational(5, 2));
    CHECK(inst.validate().ok());
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(back.value(1, Interval::make(1, 2)) == Rational(5, 2));
}

TEST_CASE("generator is reproducible and respects bounds") {
    const Instance a = generate_additive(42, 3, 5, 7);
    const Instance b = generate_additive(42, 3, 5, 7);
    for (int agent = 1; agent <= 3; ++agent) {
        for (int g = 1; g <= 5; ++g) {
            const Rational v = a.value(agent, Interval::make(g, g));
            CHECK(v == b.value(agent, Interval::make(g, g)));
            CHECK(Rational(0) <= v);
            CHECK(v <= Rational(7));
        }
    }
    const Instance c = generate_additive(43, 3, 5, 7);
    bool differs = false;
    for (int agent = 1; agent <= 3 && !differs; ++agent) {
        for (int g = 1; g <= 5 && !differs; ++g) {
            differs = !(a.value(agent, Interval::make(g, g)) ==
                        c.value(agent, Interval::make(g, g)));
        }
    }
    CHECK(differs);
    CHECK(generate_additive(0, 1, 3, 0).validate().ok());  // all-zero is valid
}
