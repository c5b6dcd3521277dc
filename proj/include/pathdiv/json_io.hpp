#pragma once

#include <json.hpp>

#include "pathdiv/instance.hpp"
#include "pathdiv/rounding.hpp"
#include "pathdiv/solver.hpp"
#include "pathdiv/verify.hpp"

namespace pathdiv {

using Json = nlohmann::json;

// Instance document:
//   {"n": 2, "m": 3, "valuations": {"type": "additive", "values": [[1, "1/2", 0], ...]}}
//   {"n": 2, "m": 3, "valuations": {"type": "table",
//       "entries": [{"agent": 1, "lo": 1, "hi": 2, "value": "3/2"}, ...]}}
// Rationals are integers or "p/q" strings. Unknown fields are rejected.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

// Division document: one entry per bundle, left to right;
// {"lo": a, "hi": b} (1-based, inclusive) or null for an empty bundle.
Division division_from_json(const Json& j, int items);
Json division_to_json(const Division& division);

// Simplex document: {"vertices": [[doubled knife positions], ...]}.
Json simplex_to_json(const ElementarySimplex& simplex);
ElementarySimplex simplex_from_json(const Json& j, int items);

Json witness_to_json(const Witness& witness);

// Solve output: mode, division, simplex (or null), witnesses, stats. Only
// stats.elapsed_ms is non-deterministic; everything else is byte-stable for
// fixed inputs and flags.
Json solve_result_to_json(const SolveResult& result, double elapsed_ms);

Json oracle_summary_to_json(OracleMode mode, const OracleSummary& summary);

Json validation_report_to_json(const Instance::ValidationReport& report);

}  // namespace pathdiv
