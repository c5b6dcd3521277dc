#include "pathdiv/verify.hpp"

#include <string>

#include "pathdiv/errors.hpp"
#include "pathdiv/matching.hpp"
#include "pathdiv/simplex.hpp"

namespace pathdiv {
namespace {

// Matches `agents` (skipping skip_agent, 0 = none) to bundles (skipping
// skip_bundle, 0 = none), edge iff the bundle clears the agent's threshold.
// Returns the assignment vector over all agents, or nullopt if some agent
// stays unmatched.
std::optional<std::vector<int>> threshold_matching(const Instance& inst,
                                                   const Division& division,
                                                   const std::vector<Rational>& thresholds,
                                                   int skip_agent, int skip_bundle) {
    std::vector<int> left_agents;
    for (int i = 1; i <= inst.agents(); ++i) {
        if (i != skip_agent) left_agents.push_back(i);
    }
    std::vector<int> right_bundles;
    for (int j = 1; j <= division.size(); ++j) {
        if (j != skip_bundle) right_bundles.push_back(j);
    }
    std::vector<std::vector<int>> adj(left_agents.size());
    for (size_t l = 0; l < left_agents.size(); ++l) {
        const int agent = left_agents[l];
        for (size_t r = 0; r < right_bundles.size(); ++r) {
            if (!(inst.value(agent, division.bundle(right_bundles[r])) <
                  thresholds[agent - 1])) {
                adj[l].push_back(static_cast<int>(r));
            }
        }
    }
    const Matching matching =
        max_bipartite_matching(adj, static_cast<int>(right_bundles.size()));
    if (matching.size != static_cast<int>(left_agents.size())) return std::nullopt;
    std::vector<int> pi(inst.agents(), 0);
    for (size_t l = 0; l < left_agents.size(); ++l) {
        pi[left_agents[l] - 1] = right_bundles[matching.left_to_right[l]];
    }
    return pi;
}

}  // namespace

bool is_ef1_outer(const Instance& inst, const Division& division, const std::vector<int>& pi) {
    check_division(division, inst.items());
    if (static_cast<int>(pi.size()) != inst.agents() || inst.agents() != division.size()) {
        throw InputError("assignment must be a permutation of all agents onto all bundles");
    }
    std::vector<char> used(division.size() + 1, 0);
    for (int b : pi) {
        if (b < 1 || b > division.size() || used[b]) {
            throw InputError("assignment must be a permutation of all agents onto all bundles");
        }
        used[b] = 1;
    }
    for (int i = 1; i <= inst.agents(); ++i) {
        const Rational mine = inst.value(i, division.bundle(pi[i - 1]));
        for (int j = 1; j <= inst.agents(); ++j) {
            if (mine < inst.up_to_one(i, division.bundle(pi[j - 1]))) return false;
        }
    }
    return true;
}

std::vector<Rational> acceptance_thresholds(const Instance& inst, const Division& division) {
    std::vector<Rational> thresholds(inst.agents());
    for (int i = 1; i <= inst.agents(); ++i) {
        Rational best(0);
        for (int j = 1; j <= division.size(); ++j) {
            const Rational v = inst.up_to_one(i, division.bundle(j));
            if (best < v) best = v;
        }
        thresholds[i - 1] = best;
    }
    return thresholds;
}

std::optional<std::vector<int>> find_ef1_outer_assignment(const Instance& inst,
                                                          const Division& division) {
    check_division(division, inst.items());
    if (division.size() != inst.agents()) {
        throw InputError("division must have one bundle per agent");
    }
    return threshold_matching(inst, division, acceptance_thresholds(inst, division), 0, 0);
}

std::optional<std::vector<std::vector<int>>> find_secretive_assignments(
    const Instance& inst, const Division& division, int secretive_agent) {
    check_division(division, inst.items());
    if (division.size() != inst.agents()) {
        throw InputError("division must have one bundle per agent");
    }
    if (secretive_agent < 1 || secretive_agent > inst.agents()) {
        throw InputError("secretive agent out of range");
    }
    // Thresholds of the non-secretive agents only; i_star's valuation stays
    // untouched.
    std::vector<Rational> thresholds(inst.agents());
    for (int i = 1; i <= inst.agents(); ++i) {
        if (i == secretive_agent) continue;
        Rational best(0);
        for (int j = 1; j <= division.size(); ++j) {
            const Rational v = inst.up_to_one(i, division.bundle(j));
            if (best < v) best = v;
        }
        thresholds[i - 1] = best;
    }
    std::vector<std::vector<int>> per_choice;
    for (int j = 1; j <= division.size(); ++j) {
        auto pi = threshold_matching(inst, division, thresholds, secretive_agent, j);
        if (!pi) return std::nullopt;
        per_choice.push_back(std::move(*pi));
    }
    return per_choice;
}

bool is_secretive_division(const Instance& inst, const Division& division,
                           int secretive_agent) {
    return find_secretive_assignments(inst, division, secretive_agent).has_value();
}

std::optional<std::vector<std::vector<int>>> find_extra_assignments(const Instance& inst,
                                                                    const Division& division) {
    check_division(division, inst.items());
    if (division.size() != inst.agents() - 1) {
        throw InputError("extra check needs one bundle fewer than agents");
    }
    const auto thresholds = acceptance_thresholds(inst, division);
    std::vector<std::vector<int>> per_leaver;
    for (int i_star = 1; i_star <= inst.agents(); ++i_star) {
        auto pi = threshold_matching(inst, division, thresholds, i_star, 0);
        if (!pi) return std::nullopt;
        per_leaver.push_back(std::move(*pi));
    }
    return per_leaver;
}

bool is_extra_division(const Instance& inst, const Division& division) {
    return find_extra_assignments(inst, division).has_value();
}

void for_each_division(int bundles, int items,
                       const std::function<bool(const Division&)>& fn) {
    if (bundles < 1 || items < 1) throw InputError("division enumeration needs n, m >= 1");
    // Cut positions 0 <= c_1 <= ... <= c_{n-1} <= m; bundle j = (c_{j-1}, c_j].
    for (const auto& cuts : nondecreasing_tuples(bundles - 1, 0, items)) {
        Division division;
        division.bundles.resize(bundles);
        int prev = 0;
        for (int j = 1; j <= bundles; ++j) {
            const int cut = (j == bundles) ? items : cuts[j - 1];
            division.bundles[j - 1] = Interval::make(prev + 1, cut);
            prev = cut;
        }
        if (!fn(division)) return;
    }
}

std::uint64_t division_count(int bundles, int items) {
    return binomial(items + bundles - 1, bundles - 1);
}

OracleSummary oracle(const Instance& inst, OracleMode mode, int secretive_agent) {
    const int bundles = mode == OracleMode::extra ? inst.agents() - 1 : inst.agents();
    if (bundles < 1) throw InputError("extra mode needs at least two agents");
    if (mode == OracleMode::secretive && secretive_agent == 0) {
        secretive_agent = inst.agents();
    }
    OracleSummary summary;
    for_each_division(bundles, inst.items(), [&](const Division& division) {
        ++summary.divisions_total;
        bool feasible = false;
        switch (mode) {
            case OracleMode::plain:
                feasible = find_ef1_outer_assignment(inst, division).has_value();
                break;
            case OracleMode::secretive:
                feasible = is_secretive_division(inst, division, secretive_agent);
                break;
            case OracleMode::extra:
                feasible = is_extra_division(inst, division);
                break;
        }
        if (feasible) {
            ++summary.feasible_count;
            if (!summary.first_feasible) summary.first_feasible = division;
        }
        return true;
    });
    if (summary.feasible_count == 0) {
        throw TheoremViolation(
            "oracle found no feasible division; this contradicts the existence guarantee");
    }
    return summary;
}

}  // namespace pathdiv
