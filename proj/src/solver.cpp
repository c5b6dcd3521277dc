#include "pathdiv/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "pathdiv/coloring.hpp"
#include "pathdiv/errors.hpp"
#include "pathdiv/matching.hpp"
#include "pathdiv/verify.hpp"

namespace pathdiv {
namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Advancing knife k can only break the ordering against knife k+1.
bool chain_in_bounds(const std::vector<int>& base, const std::vector<int>& steps) {
    const int knives = static_cast<int>(base.size());
    std::vector<int> cur = base;
    for (int k : steps) {
        ++cur[k];
        if (k + 1 < knives && cur[k] > cur[k + 1]) return false;
    }
    return true;
}

// Owner's single color per vertex, evaluated lazily into a flat table keyed
// by vertex rank. Each worker owns one; the underlying instance is shared
// read-only.
class AggregatedColorCache {
public:
    AggregatedColorCache(const Instance& inst, int bundles, const SearchHooks* hooks)
        : inst_(inst),
          cache_(vertex_count(inst.items(), bundles), 0),
          hooks_(hooks) {}

    int color(const KnifeVector& x) {
        std::int8_t& slot = cache_[vertex_rank(x)];
        if (slot == 0) {
            if (hooks_ != nullptr && hooks_->on_color) {
                const int owner = owner_label(x);
                const auto colors = agent_coloring(inst_, owner, x);
                slot = static_cast<std::int8_t>(colors.front());
                hooks_->on_color(x, owner, colors, colors.front());
            } else {
                slot = static_cast<std::int8_t>(aggregated_color(inst_, x));
            }
        }
        return slot;
    }

private:
    const Instance& inst_;
    std::vector<std::int8_t> cache_;
    const SearchHooks* hooks_;
};

// Color-set bitmasks per (vertex, agent); bit j-1 set iff bundle j is among
// the agent's favorites at that vertex. skip_agent's valuation is never read.
class ColorSetCache {
public:
    ColorSetCache(const Instance& inst, int bundles, int skip_agent)
        : inst_(inst),
          agents_(inst.agents()),
          skip_agent_(skip_agent),
          cache_(vertex_count(inst.items(), bundles) * inst.agents(), 0) {}

    std::uint32_t mask(const KnifeVector& x, std::uint64_t rank, int agent) {
        std::uint32_t& slot = cache_[rank * agents_ + agent - 1];
        if (slot == 0) {
            if (agent == skip_agent_) throw InternalError("queried the secretive agent");
            std::uint32_t mask = 0;
            for (int j : agent_coloring(inst_, agent, x)) mask |= 1u << (j - 1);
            slot = mask;
        }
        return slot;
    }

private:
    const Instance& inst_;
    int agents_;
    int skip_agent_;
    std::vector<std::uint32_t> cache_;
};

// Acceptance test for the plain mode: the owners of the chain's vertices are
// distinct by construction, so the chain is fully colored iff the n chosen
// colors are pairwise distinct. The owner-to-color map is then the witness
// permutation.
class PlainTester {
public:
    PlainTester(const Instance& inst, int bundles, const SearchHooks* hooks)
        : bundles_(bundles), full_((1u << bundles) - 1), colors_(inst, bundles, hooks) {}

    std::optional<std::vector<int>> operator()(const ElementarySimplex& simplex) {
        std::uint32_t mask = 0;
        std::vector<int> pi(bundles_, 0);
        for (const KnifeVector& vertex : simplex.vertices()) {
            const int color = colors_.color(vertex);
            pi[owner_label(vertex) - 1] = color;
            mask |= 1u << (color - 1);
        }
        if (mask != full_) return std::nullopt;
        return pi;
    }

private:
    int bundles_;
    std::uint32_t full_;
    AggregatedColorCache colors_;
};

// Matches agents other than skip_agent onto the bundles in allowed_mask using
// the union color sets; returns the assignment over all agents (0 at holes).
std::optional<std::vector<int>> mask_matching(const std::vector<std::uint32_t>& agent_mask,
                                              int agents, int bundles, int skip_agent,
                                              std::uint32_t allowed_mask) {
    std::vector<int> left_agents;
    for (int i = 1; i <= agents; ++i) {
        if (i != skip_agent) left_agents.push_back(i);
    }
    std::vector<int> right_bundles;
    for (int j = 1; j <= bundles; ++j) {
        if (allowed_mask & (1u << (j - 1))) right_bundles.push_back(j);
    }
    std::vector<std::vector<int>> adj(left_agents.size());
    for (size_t l = 0; l < left_agents.size(); ++l) {
        const std::uint32_t reachable = agent_mask[left_agents[l]] & allowed_mask;
        if (reachable == 0) return std::nullopt;  // isolated agent, no matching
        for (size_t r = 0; r < right_bundles.size(); ++r) {
            if (reachable & (1u << (right_bundles[r] - 1))) {
                adj[l].push_back(static_cast<int>(r));
            }
        }
    }
    const Matching matching =
        max_bipartite_matching(adj, static_cast<int>(right_bundles.size()));
    if (matching.size != static_cast<int>(left_agents.size())) return std::nullopt;
    std::vector<int> pi(agents, 0);
    for (size_t l = 0; l < left_agents.size(); ++l) {
        pi[left_agents[l] - 1] = right_bundles[matching.left_to_right[l]];
    }
    return pi;
}

// Acceptance test for the secretive and extra conditions on the simplex's
// color graph (edge agent-bundle iff the bundle is a favorite of the agent at
// some chain vertex). Secretive: for every bundle j, the other agents match
// onto the bundles without j. Extra: for every leaver, the rest match onto
// all bundles. The matchings themselves are the witness families.
class MatchingTester {
public:
    MatchingTester(const Instance& inst, int bundles, Mode mode, int skip_agent)
        : agents_(inst.agents()),
          bundles_(bundles),
          mode_(mode),
          skip_agent_(skip_agent),
          full_((1u << bundles) - 1),
          sets_(inst, bundles, skip_agent) {}

    std::optional<std::vector<std::vector<int>>> operator()(const ElementarySimplex& simplex) {
        std::vector<std::uint32_t> agent_mask(agents_ + 1, 0);
        for (const KnifeVector& vertex : simplex.vertices()) {
            const std::uint64_t rank = vertex_rank(vertex);
            for (int i = 1; i <= agents_; ++i) {
                if (i != skip_agent_) agent_mask[i] |= sets_.mask(vertex, rank, i);
            }
        }
        std::vector<std::vector<int>> assignments;
        if (mode_ == Mode::secretive) {
            for (int j = 1; j <= bundles_; ++j) {
                auto pi = mask_matching(agent_mask, agents_, bundles_, skip_agent_,
                                        full_ & ~(1u << (j - 1)));
                if (!pi) return std::nullopt;
                assignments.push_back(std::move(*pi));
            }
        } else {
            for (int leaver = 1; leaver <= agents_; ++leaver) {
                auto pi = mask_matching(agent_mask, agents_, bundles_, leaver, full_);
                if (!pi) return std::nullopt;
                assignments.push_back(std::move(*pi));
            }
        }
        check_edges(agent_mask, assignments);
        return assignments;
    }

private:
    // Witness self-check: every assigned bundle must be an edge of the color
    // graph and each assignment must be injective.
    void check_edges(const std::vector<std::uint32_t>& agent_mask,
                     const std::vector<std::vector<int>>& assignments) const {
        for (const auto& pi : assignments) {
            std::uint32_t used = 0;
            for (int i = 1; i <= agents_; ++i) {
                const int b = pi[i - 1];
                if (b == 0) continue;
                const std::uint32_t bit = 1u << (b - 1);
                if ((agent_mask[i] & bit) == 0 || (used & bit) != 0) {
                    throw InternalError("matching witness disagrees with the color graph");
                }
                used |= bit;
            }
        }
    }

    int agents_;
    int bundles_;
    Mode mode_;
    int skip_agent_;
    std::uint32_t full_;
    ColorSetCache sets_;
};

template <typename Payload>
struct Accepted {
    std::uint64_t key = 0;  // base index * knives! + permutation rank
    ElementarySimplex simplex{KnifeVector(1, {}), {}};
    Payload payload;
};

// Serial canonical scan; the key of an acceptance is its index among valid
// chains. Used when a single thread is requested or debug hooks are active.
template <typename Payload, typename Tester>
std::optional<Accepted<Payload>> scan_serial(int items, int bundles, Tester& tester,
                                             const SearchHooks& hooks) {
    std::optional<Accepted<Payload>> found;
    std::uint64_t index = 0;
    for_each_simplex(items, bundles, [&](const ElementarySimplex& simplex) {
        if (hooks.on_simplex) hooks.on_simplex(simplex, index);
        auto payload = tester(simplex);
        if (payload) {
            found = Accepted<Payload>{index, simplex, std::move(*payload)};
            return false;
        }
        ++index;
        return true;
    });
    return found;
}

// Parallel scan over the same canonical order. Workers claim base vertices
// dynamically and prune against the best key seen so far; the reduction keeps
// the canonical-minimal acceptance, so the result is thread-count invariant.
template <typename Payload, typename MakeTester>
std::optional<Accepted<Payload>> scan_parallel(int items, int bundles, int threads,
                                               const MakeTester& make_tester) {
    const int knives = bundles - 1;
    const auto bases = nondecreasing_tuples(knives, 1, 2 * items);
    const std::uint64_t fact = factorial(knives);
    std::atomic<std::size_t> next_base{0};
    std::atomic<std::uint64_t> best_key{std::numeric_limits<std::uint64_t>::max()};
    std::vector<std::optional<Accepted<Payload>>> results(threads);

    auto worker = [&](int w) {
        auto tester = make_tester();
        while (true) {
            const std::size_t b = next_base.fetch_add(1);
            if (b >= bases.size()) break;
            const std::uint64_t base_key = b * fact;
            if (base_key >= best_key.load(std::memory_order_relaxed)) break;
            std::vector<int> steps(knives);
            std::iota(steps.begin(), steps.end(), 0);
            std::uint64_t perm_rank = 0;
            do {
                const std::uint64_t key = base_key + perm_rank;
                ++perm_rank;
                if (key >= best_key.load(std::memory_order_relaxed)) break;
                if (!chain_in_bounds(bases[b], steps)) continue;
                const ElementarySimplex simplex{KnifeVector(items, bases[b]), steps};
                auto payload = tester(simplex);
                if (!payload) continue;
                auto& local = results[w];
                if (!local || key < local->key) {
                    local = Accepted<Payload>{key, simplex, std::move(*payload)};
                }
                std::uint64_t cur = best_key.load();
                while (key < cur && !best_key.compare_exchange_weak(cur, key)) {
                }
                break;  // later chains of this base rank worse
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    };

    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (auto& t : pool) t.join();

    std::optional<Accepted<Payload>> best;
    for (auto& r : results) {
        if (r && (!best || r->key < best->key)) best = std::move(r);
    }
    return best;
}

// Canonical index of the accepted chain = number of valid chains ordered
// strictly before it. Recomputed serially so that stats do not depend on the
// thread count.
std::uint64_t canonical_index_of_key(int items, int bundles, std::uint64_t key) {
    const int knives = bundles - 1;
    const auto bases = nondecreasing_tuples(knives, 1, 2 * items);
    const std::uint64_t fact = factorial(knives);
    const std::size_t base_idx = key / fact;
    const std::uint64_t perm_limit = key % fact;
    std::uint64_t index = 0;
    for (std::size_t b = 0; b <= base_idx && b < bases.size(); ++b) {
        std::vector<int> steps(knives);
        std::iota(steps.begin(), steps.end(), 0);
        std::uint64_t perm_rank = 0;
        do {
            if (b == base_idx && perm_rank >= perm_limit) break;
            ++perm_rank;
            if (chain_in_bounds(bases[b], steps)) ++index;
        } while (std::next_permutation(steps.begin(), steps.end()));
    }
    return index;
}

template <typename Payload, typename MakeTester>
Accepted<Payload> run_search(const Instance& inst, int bundles, int threads,
                             const SearchHooks& hooks, const MakeTester& make_tester,
                             const char* what) {
    const bool serial = threads <= 1 || hooks.on_simplex || hooks.on_color;
    std::optional<Accepted<Payload>> found;
    if (serial) {
        auto tester = make_tester();
        found = scan_serial<Payload>(inst.items(), bundles, tester, hooks);
    } else {
        found = scan_parallel<Payload>(inst.items(), bundles, threads, make_tester);
        if (found) {
            found->key = canonical_index_of_key(inst.items(), bundles, found->key);
        }
    }
    if (!found) {
        std::ostringstream oss;
        oss << "exhausted " << count_simplices(inst.items(), bundles)
            << " elementary simplices without finding " << what << " (n=" << inst.agents()
            << ", m=" << inst.items() << ", bundles=" << bundles
            << "); the existence guarantee or this implementation is broken";
        throw TheoremViolation(oss.str());
    }
    return std::move(*found);
}

// ---------------------------------------------------------------------------
// Path following (plain mode). The walk moves from cell to cell through
// facets carrying the colors {1..n-1} exactly ("doors"). Interior doors join
// exactly two cells; a fully colored cell has exactly one door; boundary
// doors occur only on the face where the last knife is pinned at m+1/2 (every
// other boundary face lacks one of the door colors, because some bundle is
// empty throughout it). Starting walks from the boundary doors in canonical
// order must therefore end in a fully colored cell after an odd number of
// door-to-door hops.

struct RawChain {
    std::vector<int> base;
    std::vector<int> steps;
};

std::vector<std::vector<int>> chain_vertex_coords(const RawChain& chain) {
    std::vector<std::vector<int>> out;
    out.reserve(chain.steps.size() + 1);
    out.push_back(chain.base);
    std::vector<int> cur = chain.base;
    for (int k : chain.steps) {
        ++cur[k];
        out.push_back(cur);
    }
    return out;
}

bool raw_chain_valid(int items, const RawChain& chain) {
    const int knives = static_cast<int>(chain.base.size());
    const int top = 2 * items + 1;
    std::vector<int> cur = chain.base;
    auto ordered = [&]() {
        int prev = 1;
        for (int d : cur) {
            if (d < prev || d > top) return false;
            prev = d;
        }
        return true;
    };
    if (!ordered()) return false;
    for (int k : chain.steps) {
        ++cur[k];
        if (cur[k] > top) return false;
        if (k + 1 < knives && cur[k] > cur[k + 1]) return false;
    }
    return true;
}

struct PivotResult {
    RawChain chain;
    int new_vertex = 0;
};

// The neighboring cell across the facet opposite vertex `drop`.
PivotResult pivot_chain(const RawChain& chain, int drop) {
    const int last = static_cast<int>(chain.steps.size());
    PivotResult out;
    if (drop == 0) {
        out.chain.base = chain.base;
        ++out.chain.base[chain.steps.front()];
        out.chain.steps.assign(chain.steps.begin() + 1, chain.steps.end());
        out.chain.steps.push_back(chain.steps.front());
        out.new_vertex = last;
    } else if (drop == last) {
        out.chain.base = chain.base;
        --out.chain.base[chain.steps.back()];
        out.chain.steps.assign(1, chain.steps.back());
        out.chain.steps.insert(out.chain.steps.end(), chain.steps.begin(),
                               chain.steps.end() - 1);
        out.new_vertex = 0;
    } else {
        out.chain = chain;
        std::swap(out.chain.steps[drop - 1], out.chain.steps[drop]);
        out.new_vertex = drop;
    }
    return out;
}

class PathFollowEngine {
public:
    PathFollowEngine(const Instance& inst, const SearchHooks* hooks)
        : items_(inst.items()),
          bundles_(inst.agents()),
          knives_(bundles_ - 1),
          full_((1u << bundles_) - 1),
          colors_(inst, bundles_, hooks) {
        // Cell count of the triangulation, (2m)^knives: a hard cap on any walk.
        limit_ = 1;
        for (int k = 0; k < knives_; ++k) limit_ *= 2 * static_cast<std::uint64_t>(items_);
        ++limit_;
    }

    PlainSearch run() {
        std::optional<std::pair<RawChain, std::vector<int>>> accepted;
        if (knives_ == 1) {
            // The pinned face is the single vertex at m+1/2; its color is 1.
            RawChain entry{{2 * items_}, {0}};
            accepted = walk(entry, 0);
        } else {
            for (const auto& face_base : nondecreasing_tuples(knives_ - 1, 1, 2 * items_)) {
                std::vector<int> face_steps(knives_ - 1);
                std::iota(face_steps.begin(), face_steps.end(), 0);
                do {
                    if (!chain_in_bounds(face_base, face_steps)) continue;
                    RawChain face;
                    face.base = face_base;
                    face.base.push_back(2 * items_ + 1);
                    face.steps = face_steps;
                    if (!is_boundary_door(face)) continue;
                    const auto key = flatten(chain_vertex_coords(face));
                    if (!visited_.insert(key).second) continue;
                    RawChain entry;
                    entry.base = face.base;
                    entry.base.back() = 2 * items_;
                    entry.steps.assign(1, knives_ - 1);
                    entry.steps.insert(entry.steps.end(), face.steps.begin(),
                                       face.steps.end());
                    accepted = walk(entry, 0);
                    if (accepted) break;
                } while (std::next_permutation(face_steps.begin(), face_steps.end()));
                if (accepted) break;
            }
        }
        if (!accepted) {
            throw TheoremViolation(
                "path following exhausted all boundary doors without reaching a fully "
                "colored cell; the properness of the coloring or the walk is broken");
        }
        return PlainSearch{
            ElementarySimplex{KnifeVector(items_, accepted->first.base),
                              accepted->first.steps},
            std::move(accepted->second), SearchStats{visits_, std::nullopt}};
    }

private:
    int color_at(const std::vector<int>& coords) {
        return colors_.color(KnifeVector(items_, coords));
    }

    // A facet of the pinned face acts as a door iff its vertices wear the
    // colors {1..n-1} exactly once each.
    bool is_boundary_door(const RawChain& face) {
        std::uint32_t mask = 0;
        int count = 0;
        for (const auto& coords : chain_vertex_coords(face)) {
            mask |= 1u << (color_at(coords) - 1);
            ++count;
        }
        return mask == (1u << (count)) - 1 && count == knives_;
    }

    std::vector<int> flatten(const std::vector<std::vector<int>>& vertices) {
        std::vector<int> key;
        for (const auto& v : vertices) key.insert(key.end(), v.begin(), v.end());
        return key;
    }

    std::vector<int> facet_key(const RawChain& chain, int drop) {
        const auto verts = chain_vertex_coords(chain);
        std::vector<std::vector<int>> rest;
        for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
            if (t != drop) rest.push_back(verts[t]);
        }
        return flatten(rest);
    }

    std::optional<std::pair<RawChain, std::vector<int>>> walk(RawChain chain,
                                                              int entry_vertex) {
        while (true) {
            if (++visits_ > limit_) {
                throw InternalError("path following revisited a cell; walk is broken");
            }
            const auto verts = chain_vertex_coords(chain);
            std::vector<int> colors(verts.size());
            std::uint32_t mask = 0;
            for (std::size_t t = 0; t < verts.size(); ++t) {
                colors[t] = color_at(verts[t]);
                mask |= 1u << (colors[t] - 1);
            }
            if (mask == full_) {
                std::vector<int> pi(bundles_, 0);
                for (std::size_t t = 0; t < verts.size(); ++t) {
                    pi[owner_label(KnifeVector(items_, verts[t])) - 1] = colors[t];
                }
                return std::make_pair(chain, std::move(pi));
            }
            int other = -1;
            for (int t = 0; t < static_cast<int>(colors.size()); ++t) {
                if (t != entry_vertex && colors[t] == colors[entry_vertex]) {
                    other = t;
                    break;
                }
            }
            if (other == -1) throw InternalError("entered through a non-door facet");
            PivotResult next = pivot_chain(chain, other);
            if (!raw_chain_valid(items_, next.chain)) {
                visited_.insert(facet_key(chain, other));
                return std::nullopt;
            }
            chain = std::move(next.chain);
            entry_vertex = next.new_vertex;
        }
    }

    int items_;
    int bundles_;
    int knives_;
    std::uint32_t full_;
    std::uint64_t limit_ = 0;
    std::uint64_t visits_ = 0;
    AggregatedColorCache colors_;
    std::set<std::vector<int>> visited_;
};

void require_searchable(const Instance& inst, int bundles) {
    if (inst.items() < bundles) {
        throw InputError("search requires m >= number of bundles");
    }
}

}  // namespace

PlainSearch find_plain(const Instance& inst, Engine engine, int threads,
                       const SearchHooks& hooks) {
    const int bundles = inst.agents();
    require_searchable(inst, bundles);
    if (engine == Engine::pathfollow) {
        if (bundles < 2) throw InputError("path following needs at least two bundles");
        PathFollowEngine walker(inst, (hooks.on_color) ? &hooks : nullptr);
        return walker.run();
    }
    auto accepted = run_search<std::vector<int>>(
        inst, bundles, threads, hooks,
        [&] { return PlainTester(inst, bundles, hooks.on_color ? &hooks : nullptr); },
        "a fully colored simplex");
    return PlainSearch{accepted.simplex, std::move(accepted.payload),
                       SearchStats{accepted.key + 1, accepted.key}};
}

SecretiveSearch find_secretive(const Instance& inst, int secretive_agent, int threads) {
    const int bundles = inst.agents();
    require_searchable(inst, bundles);
    if (secretive_agent < 1 || secretive_agent > inst.agents()) {
        throw InputError("secretive agent out of range");
    }
    auto accepted = run_search<std::vector<std::vector<int>>>(
        inst, bundles, threads, SearchHooks{},
        [&] { return MatchingTester(inst, bundles, Mode::secretive, secretive_agent); },
        "a simplex satisfying the secretive matching condition");
    return SecretiveSearch{accepted.simplex, std::move(accepted.payload),
                           SearchStats{accepted.key + 1, accepted.key}};
}

ExtraSearch find_extra(const Instance& inst, int threads) {
    if (inst.agents() < 2) throw InputError("extra mode needs at least two agents");
    const int bundles = inst.agents() - 1;
    require_searchable(inst, bundles);
    auto accepted = run_search<std::vector<std::vector<int>>>(
        inst, bundles, threads, SearchHooks{},
        [&] { return MatchingTester(inst, bundles, Mode::extra, 0); },
        "a simplex satisfying the extra matching condition");
    return ExtraSearch{accepted.simplex, std::move(accepted.payload),
                       SearchStats{accepted.key + 1, accepted.key}};
}

namespace {

void self_check(const Instance& inst, const SolveResult& result, int secretive_agent) {
    check_division(result.division, inst.items());
    const int bundles = result.division.size();
    auto threshold = [&](int agent) {
        Rational best(0);
        for (int j = 1; j <= bundles; ++j) {
            const Rational v = inst.up_to_one(agent, result.division.bundle(j));
            if (best < v) best = v;
        }
        return best;
    };
    auto check_assignment = [&](const std::vector<int>& pi, int skip_agent,
                                int skip_bundle) {
        if (static_cast<int>(pi.size()) != inst.agents()) {
            throw SelfCheckFailure("witness has wrong arity");
        }
        std::uint32_t used = 0;
        for (int i = 1; i <= inst.agents(); ++i) {
            const int b = pi[i - 1];
            if (i == skip_agent) {
                if (b != 0) throw SelfCheckFailure("excluded agent received a bundle");
                continue;
            }
            if (b < 1 || b > bundles || b == skip_bundle || (used & (1u << (b - 1)))) {
                throw SelfCheckFailure("witness is not a valid assignment");
            }
            used |= 1u << (b - 1);
            if (inst.value(i, result.division.bundle(b)) < threshold(i)) {
                throw SelfCheckFailure("witness assignment misses an agent's threshold");
            }
        }
    };
    if (const auto* plain = std::get_if<PlainWitness>(&result.witness)) {
        if (!is_ef1_outer(inst, result.division, plain->pi)) {
            throw SelfCheckFailure("division is not EF1-outer under the produced witness");
        }
    } else if (const auto* secretive = std::get_if<SecretiveWitness>(&result.witness)) {
        if (static_cast<int>(secretive->per_choice.size()) != bundles) {
            throw SelfCheckFailure("secretive witness must cover every choice");
        }
        for (int j = 1; j <= bundles; ++j) {
            check_assignment(secretive->per_choice[j - 1], secretive_agent, j);
        }
        if (!is_secretive_division(inst, result.division, secretive_agent)) {
            throw SelfCheckFailure("independent secretive check rejected the division");
        }
    } else if (const auto* extra = std::get_if<ExtraWitness>(&result.witness)) {
        if (static_cast<int>(extra->per_leaver.size()) != inst.agents()) {
            throw SelfCheckFailure("extra witness must cover every leaver");
        }
        for (int leaver = 1; leaver <= inst.agents(); ++leaver) {
            check_assignment(extra->per_leaver[leaver - 1], leaver, 0);
        }
        if (!is_extra_division(inst, result.division)) {
            throw SelfCheckFailure("independent extra check rejected the division");
        }
    }
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& options) {
    const auto validation = inst.validate();
    if (!validation.ok()) {
        std::ostringstream oss;
        oss << "instance failed validation (" << validation.violations.size()
            << " violation(s)); first: agent " << validation.violations.front().agent
            << ", interval " << validation.violations.front().interval.str() << ": "
            << validation.violations.front().what;
        throw InputError(oss.str());
    }
    const Mode mode = options.mode;
    if (mode == Mode::extra && inst.agents() < 2) {
        throw InputError("extra mode needs at least two agents");
    }
    const int bundles = mode == Mode::extra ? inst.agents() - 1 : inst.agents();
    int secretive_agent = 0;
    if (mode == Mode::secretive) {
        secretive_agent =
            options.secretive_agent == 0 ? inst.agents() : options.secretive_agent;
        if (secretive_agent < 1 || secretive_agent > inst.agents()) {
            throw InputError("secretive agent out of range");
        }
    } else if (options.secretive_agent != 0) {
        throw InputError("--secretive-agent applies to secretive mode only");
    }

    SolveResult result;
    result.mode = mode;

    if (options.forced_simplex) {
        if (mode != Mode::plain) {
            throw InputError("a forced simplex applies to plain mode only");
        }
        const ElementarySimplex& simplex = *options.forced_simplex;
        if (simplex.items() != inst.items() || simplex.bundles() != bundles) {
            throw InputError("forced simplex does not match the instance dimensions");
        }
        result.simplex = simplex;
        result.division = round_simplex(simplex);
        auto pi = find_ef1_outer_assignment(inst, result.division);
        if (!pi) {
            throw SelfCheckFailure("forced simplex rounds to a division with no certificate");
        }
        result.witness = PlainWitness{std::move(*pi)};
        self_check(inst, result, secretive_agent);
        return result;
    }

    if (inst.items() < bundles) {
        result.division = trivial_division(bundles, inst.items());
    } else if (bundles == 1 && mode != Mode::extra) {
        result.division.bundles = {Interval::make(1, inst.items())};
    } else {
        switch (mode) {
            case Mode::plain: {
                auto search = find_plain(inst, options.engine, options.threads, options.hooks);
                result.simplex = search.simplex;
                result.division = round_simplex(search.simplex);
                result.witness = PlainWitness{std::move(search.pi)};
                result.stats = search.stats;
                break;
            }
            case Mode::secretive: {
                auto search = find_secretive(inst, secretive_agent, options.threads);
                result.simplex = search.simplex;
                result.division = round_simplex(search.simplex);
                result.witness =
                    SecretiveWitness{secretive_agent, std::move(search.per_choice)};
                result.stats = search.stats;
                break;
            }
            case Mode::extra: {
                auto search = find_extra(inst, options.threads);
                result.simplex = search.simplex;
                result.division = round_simplex(search.simplex);
                result.witness = ExtraWitness{std::move(search.per_leaver)};
                result.stats = search.stats;
                break;
            }
        }
        self_check(inst, result, secretive_agent);
        return result;
    }

    // Shortcut routes: derive witnesses from the division itself.
    switch (mode) {
        case Mode::plain: {
            auto pi = find_ef1_outer_assignment(inst, result.division);
            if (!pi) throw InternalError("shortcut division lost its certificate");
            result.witness = PlainWitness{std::move(*pi)};
            break;
        }
        case Mode::secretive: {
            auto per_choice = find_secretive_assignments(inst, result.division,
                                                         secretive_agent);
            if (!per_choice) throw InternalError("shortcut division lost its certificate");
            result.witness = SecretiveWitness{secretive_agent, std::move(*per_choice)};
            break;
        }
        case Mode::extra: {
            auto per_leaver = find_extra_assignments(inst, result.division);
            if (!per_leaver) throw InternalError("shortcut division lost its certificate");
            result.witness = ExtraWitness{std::move(*per_leaver)};
            break;
        }
    }
    self_check(inst, result, secretive_agent);
    return result;
}

}  // namespace pathdiv
