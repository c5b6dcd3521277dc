#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pathdiv/instance.hpp"
#include "pathdiv/rounding.hpp"

namespace pathdiv {

// Independent certification of divisions. Nothing here looks at knife
// configurations or colorings: the checkers work straight from the
// definitions, which makes them a genuine cross-check on the solver.
//
// An assignment pi maps agents to bundle indices; pi[i-1] == 0 marks an agent
// that receives nothing (the secretive agent / the leaver).

// Envy-freeness up to one outer good under assignment pi (a full permutation):
// for every pair i, j: v_i(I_{pi(i)}) >= v^-_i(I_{pi(j)}).
bool is_ef1_outer(const Instance& inst, const Division& division, const std::vector<int>& pi);

// Per-agent acceptance thresholds t_i = max_j v^-_i(I_j). An assignment
// satisfies the condition above iff every agent's bundle clears their
// threshold, which turns feasibility into a bipartite matching question.
std::vector<Rational> acceptance_thresholds(const Instance& inst, const Division& division);

// Some certifying permutation, or nullopt if none exists. Sound and complete.
std::optional<std::vector<int>> find_ef1_outer_assignment(const Instance& inst,
                                                          const Division& division);

// Secretive check: whichever bundle j agent i_star picks, the remaining
// agents can be matched to the remaining bundles, each clearing their
// threshold. Never queries i_star's valuation. Returns one assignment per
// choice of j (entry j-1), or nullopt.
std::optional<std::vector<std::vector<int>>> find_secretive_assignments(
    const Instance& inst, const Division& division, int secretive_agent);
bool is_secretive_division(const Instance& inst, const Division& division, int secretive_agent);

// Extra check, for instances with one agent more than the division has
// bundles: whichever agent leaves, the rest can be matched to all bundles.
// Returns one assignment per leaver (entry i_star-1), or nullopt.
std::optional<std::vector<std::vector<int>>> find_extra_assignments(const Instance& inst,
                                                                    const Division& division);
bool is_extra_division(const Instance& inst, const Division& division);

// All ordered divisions of [1, m] into n connected possibly-empty bundles,
// lexicographic by cut positions. The callback returns false to stop.
void for_each_division(int bundles, int items, const std::function<bool(const Division&)>& fn);

// C(m + n - 1, n - 1)
std::uint64_t division_count(int bundles, int items);

enum class OracleMode { plain, secretive, extra };

// Exhaustive ground truth: how many divisions pass the checker, and the first
// one in canonical order. Any valid instance must have feasible_count >= 1;
// zero raises TheoremViolation.
struct OracleSummary {
    std::uint64_t divisions_total = 0;
    std::uint64_t feasible_count = 0;
    std::optional<Division> first_feasible;
};
OracleSummary oracle(const Instance& inst, OracleMode mode, int secretive_agent = 0);

}  // namespace pathdiv
