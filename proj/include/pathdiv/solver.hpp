#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "pathdiv/instance.hpp"
#include "pathdiv/rounding.hpp"
#include "pathdiv/simplex.hpp"

namespace pathdiv {

enum class Mode { plain, secretive, extra };
enum class Engine { exhaustive, pathfollow };

// The solver's own certificate never leaves the process unchecked: solve()
// re-validates it against the division and throws SelfCheckFailure (CLI exit
// code 1) if it does not hold.
struct SelfCheckFailure : std::runtime_error {
    explicit SelfCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// pi[i-1] = bundle of agent i; 0 marks the agent left out (secretive/extra).
struct PlainWitness {
    std::vector<int> pi;
};
struct SecretiveWitness {
    int secretive_agent = 0;
    std::vector<std::vector<int>> per_choice;  // [j-1]: assignment when i* picks j
};
struct ExtraWitness {
    std::vector<std::vector<int>> per_leaver;  // [i*-1]: assignment when i* leaves
};
using Witness = std::variant<PlainWitness, SecretiveWitness, ExtraWitness>;

// Counts follow the canonical serial enumeration regardless of thread count:
// scanned = accepted_index + 1 when a search ran. accepted_index is empty for
// trivial routes, forced simplices, and the path-following engine (which
// reports its visit count in scanned instead).
struct SearchStats {
    std::uint64_t simplices_scanned = 0;
    std::optional<std::uint64_t> accepted_index;
};

struct SolveResult {
    Mode mode = Mode::plain;
    Division division;
    std::optional<ElementarySimplex> simplex;
    Witness witness;
    SearchStats stats;
};

// Debug taps. Only honored by single-threaded exhaustive scans; on_color
// fires once per distinct vertex when its aggregated color is first computed
// (plain mode only).
struct SearchHooks {
    std::function<void(const ElementarySimplex&, std::uint64_t index)> on_simplex;
    std::function<void(const KnifeVector&, int owner, const std::vector<int>& colors,
                       int chosen)>
        on_color;
};

struct SolveOptions {
    Mode mode = Mode::plain;
    int secretive_agent = 0;  // 0 = last agent
    Engine engine = Engine::exhaustive;
    int threads = 1;
    std::optional<ElementarySimplex> forced_simplex;  // plain mode: skip the search
    SearchHooks hooks;
};

// Full pipeline: validate, search (or shortcut), round, self-verify.
// Shortcuts: m < bundles yields the singleton division; a single bundle in
// plain/secretive mode yields the whole path without a search.
SolveResult solve(const Instance& inst, const SolveOptions& options = {});

// Search-level entry points (validated instance, m >= bundles).

// First simplex in canonical order whose vertices, read owner by owner, wear
// all n colors. Returns the owner-to-color permutation.
struct PlainSearch {
    ElementarySimplex simplex;
    std::vector<int> pi;
    SearchStats stats;
};
PlainSearch find_plain(const Instance& inst, Engine engine = Engine::exhaustive,
                       int threads = 1, const SearchHooks& hooks = {});

// First simplex such that for every bundle j, the agents other than i* can be
// matched onto the bundles other than j inside the simplex's color graph.
// Agent i*'s valuation is never queried.
struct SecretiveSearch {
    ElementarySimplex simplex;
    std::vector<std::vector<int>> per_choice;
    SearchStats stats;
};
SecretiveSearch find_secretive(const Instance& inst, int secretive_agent, int threads = 1);

// First simplex (over one bundle fewer than agents) such that whichever agent
// leaves, the rest match onto all bundles in the color graph.
struct ExtraSearch {
    ElementarySimplex simplex;
    std::vector<std::vector<int>> per_leaver;
    SearchStats stats;
};
ExtraSearch find_extra(const Instance& inst, int threads = 1);

}  // namespace pathdiv
