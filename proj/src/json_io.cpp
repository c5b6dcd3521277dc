#include "pathdiv/json_io.hpp"

#include "pathdiv/errors.hpp"

namespace pathdiv {
namespace {

void expect_keys(const Json& j, const char* where,
                 std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw InputError(std::string(where) + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : allowed) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw InputError(std::string("unknown field '") + key + "' in " + where);
        }
    }
    for (const char* k : allowed) {
        if (!j.contains(k)) {
            throw InputError(std::string("missing field '") + k + "' in " + where);
        }
    }
}

int get_int(const Json& j, const char* where) {
    if (!j.is_number_integer()) {
        throw InputError(std::string(where) + " must be an integer");
    }
    return j.get<int>();
}

Rational rational_from_json(const Json& j, const char* where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError(std::string(where) + " must be an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& r) {
    if (r.den() == 1) return Json(r.num());
    return Json(r.str());
}

}  // namespace

Instance instance_from_json(const Json& j) {
    expect_keys(j, "instance", {"n", "m", "valuations"});
    const int n = get_int(j["n"], "n");
    const int m = get_int(j["m"], "m");
    if (n < 1 || m < 1) throw InputError("instance needs n >= 1 and m >= 1");
    const Json& val = j["valuations"];
    if (!val.is_object() || !val.contains("type") || !val["type"].is_string()) {
        throw InputError("valuations must carry a string 'type'");
    }
    const std::string type = val["type"].get<std::string>();
    if (type == "additive") {
        expect_keys(val, "valuations", {"type", "values"});
        const Json& rows = val["values"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
            throw InputError("additive 'values' must hold one row per agent");
        }
        std::vector<std::vector<Rational>> values(n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != m) {
                throw InputError("additive value rows must all have length m");
            }
            for (const Json& cell : rows[i]) {
                values[i].push_back(rational_from_json(cell, "item value"));
            }
        }
        return Instance::additive(std::move(values));
    }
    if (type == "table") {
        expect_keys(val, "valuations", {"type", "entries"});
        const Json& entries = val["entries"];
        if (!entries.is_array()) throw InputError("table 'entries' must be an array");
        std::vector<Instance::TableEntry> parsed;
        for (const Json& e : entries) {
            expect_keys(e, "table entry", {"agent", "lo", "hi", "value"});
            Instance::TableEntry entry;
            entry.agent = get_int(e["agent"], "agent");
            const int lo = get_int(e["lo"], "lo");
            const int hi = get_int(e["hi"], "hi");
            if (lo < 1 || hi < lo) throw InputError("table entry interval is malformed");
            entry.interval = Interval::make(lo, hi);
            entry.value = rational_from_json(e["value"], "table value");
            parsed.push_back(entry);
        }
        return Instance::table(n, m, parsed);
    }
    throw InputError("valuations type must be 'additive' or 'table'");
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["n"] = inst.agents();
    j["m"] = inst.items();
    if (inst.kind() == Instance::Kind::additive) {
        Json rows = Json::array();
        for (int i = 1; i <= inst.agents(); ++i) {
            Json row = Json::array();
            for (const Rational& v : inst.item_values(i)) row.push_back(rational_to_json(v));
            rows.push_back(std::move(row));
        }
        j["valuations"] = {{"type", "additive"}, {"values", std::move(rows)}};
    } else {
        Json entries = Json::array();
        for (int i = 1; i <= inst.agents(); ++i) {
            for (int lo = 1; lo <= inst.items(); ++lo) {
                for (int hi = lo; hi <= inst.items(); ++hi) {
                    const Interval interval = Interval::make(lo, hi);
                    entries.push_back({{"agent", i},
                                       {"lo", lo},
                                       {"hi", hi},
                                       {"value", rational_to_json(inst.value(i, interval))}});
                }
            }
        }
        j["valuations"] = {{"type", "table"}, {"entries", std::move(entries)}};
    }
    return j;
}

Division division_from_json(const Json& j, int items) {
    if (!j.is_array() || j.empty()) {
        throw InputError("division must be a non-empty array of bundles");
    }
    Division division;
    for (const Json& b : j) {
        if (b.is_null()) {
            division.bundles.push_back(Interval::empty());
            continue;
        }
        expect_keys(b, "bundle", {"lo", "hi"});
        const int lo = get_int(b["lo"], "lo");
        const int hi = get_int(b["hi"], "hi");
        if (lo < 1 || hi < lo) throw InputError("bundle interval is malformed");
        division.bundles.push_back(Interval::make(lo, hi));
    }
    check_division(division, items);
    return division;
}

Json division_to_json(const Division& division) {
    Json j = Json::array();
    for (const Interval& bundle : division.bundles) {
        if (bundle.is_empty()) {
            j.push_back(nullptr);
        } else {
            j.push_back({{"lo", bundle.lo}, {"hi", bundle.hi}});
        }
    }
    return j;
}

Json simplex_to_json(const ElementarySimplex& simplex) {
    Json vertices = Json::array();
    for (const KnifeVector& v : simplex.vertices()) {
        vertices.push_back(v.coords());
    }
    return Json{{"vertices", std::move(vertices)}};
}

ElementarySimplex simplex_from_json(const Json& j, int items) {
    expect_keys(j, "simplex", {"vertices"});
    const Json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty()) {
        throw InputError("simplex 'vertices' must be a non-empty array");
    }
    std::vector<std::vector<int>> coords;
    for (const Json& v : verts) {
        if (!v.is_array()) throw InputError("each simplex vertex must be an array");
        std::vector<int> one;
        for (const Json& d : v) one.push_back(get_int(d, "doubled knife position"));
        coords.push_back(std::move(one));
    }
    return simplex_from_vertices(items, coords);
}

namespace {

Json assignment_to_json(const std::vector<int>& pi) {
    Json out = Json::array();
    for (int b : pi) {
        if (b == 0) {
            out.push_back(nullptr);
        } else {
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace

Json witness_to_json(const Witness& witness) {
    Json j;
    if (const auto* plain = std::get_if<PlainWitness>(&witness)) {
        j["pi"] = plain->pi;
    } else if (const auto* secretive = std::get_if<SecretiveWitness>(&witness)) {
        j["secretive_agent"] = secretive->secretive_agent;
        Json per_choice = Json::array();
        for (int choice = 1; choice <= static_cast<int>(secretive->per_choice.size());
             ++choice) {
            per_choice.push_back(
                {{"chosen", choice},
                 {"pi", assignment_to_json(secretive->per_choice[choice - 1])}});
        }
        j["per_choice"] = std::move(per_choice);
    } else if (const auto* extra = std::get_if<ExtraWitness>(&witness)) {
        Json per_leaver = Json::array();
        for (int leaver = 1; leaver <= static_cast<int>(extra->per_leaver.size());
             ++leaver) {
            per_leaver.push_back(
                {{"leaver", leaver},
                 {"pi", assignment_to_json(extra->per_leaver[leaver - 1])}});
        }
        j["per_leaver"] = std::move(per_leaver);
    }
    return j;
}

namespace {

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::plain:
            return "plain";
        case Mode::secretive:
            return "secretive";
        case Mode::extra:
            return "extra";
    }
    return "?";
}

}  // namespace

Json solve_result_to_json(const SolveResult& result, double elapsed_ms) {
    Json j;
    j["mode"] = mode_name(result.mode);
    j["division"] = division_to_json(result.division);
    j["simplex"] = result.simplex ? simplex_to_json(*result.simplex) : Json(nullptr);
    j["witnesses"] = witness_to_json(result.witness);
    Json stats;
    stats["simplices_scanned"] = result.stats.simplices_scanned;
    stats["accepted_index"] =
        result.stats.accepted_index ? Json(*result.stats.accepted_index) : Json(nullptr);
    stats["elapsed_ms"] = elapsed_ms;
    j["stats"] = std::move(stats);
    return j;
}

Json oracle_summary_to_json(OracleMode mode, const OracleSummary& summary) {
    Json j;
    switch (mode) {
        case OracleMode::plain:
            j["mode"] = "plain";
            break;
        case OracleMode::secretive:
            j["mode"] = "secretive";
            break;
        case OracleMode::extra:
            j["mode"] = "extra";
            break;
    }
    j["divisions_total"] = summary.divisions_total;
    j["feasible_count"] = summary.feasible_count;
    j["first_feasible"] =
        summary.first_feasible ? division_to_json(*summary.first_feasible) : Json(nullptr);
    return j;
}

Json validation_report_to_json(const Instance::ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"agent", v.agent},
                              {"lo", v.interval.is_empty() ? Json(nullptr) : Json(v.interval.lo)},
                              {"hi", v.interval.is_empty() ? Json(nullptr) : Json(v.interval.hi)},
                              {"what", v.what}});
    }
    return Json{{"valid", report.ok()}, {"violations", std::move(violations)}};
}

}  // namespace pathdiv
