#include "pathdiv/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pathdiv/errors.hpp"

namespace pathdiv {

KnifeVector::KnifeVector(int items, std::vector<int> doubled)
    : items_(items), doubled_(std::move(doubled)) {
    if (items_ < 1) throw InputError("knife vector needs items >= 1");
    int prev = 1;
    for (int d : doubled_) {
        if (d < prev || d > 2 * items_ + 1) {
            throw InputError("knife positions must be non-decreasing within [1/2, m+1/2]");
        }
        prev = d;
    }
}

int KnifeVector::doubled(int k) const {
    if (k == 0) return 1;
    if (k == bundles()) return 2 * items_ + 1;
    return doubled_[k - 1];
}

Interval KnifeVector::bundle(int j) const {
    const int left = doubled(j - 1);
    const int right = doubled(j);
    // smallest item > left/2 and largest item < right/2
    return Interval::make(left / 2 + 1, (right - 1) / 2);
}

std::pair<int, int> KnifeVector::boundary_items(int j) const {
    return {(doubled(j - 1) + 1) / 2, doubled(j) / 2};
}

PartialDivision partial_division(const KnifeVector& x) {
    PartialDivision bundles(x.bundles());
    for (int j = 1; j <= x.bundles(); ++j) bundles[j - 1] = x.bundle(j);
    return bundles;
}

int owner_label(const KnifeVector& x) {
    long long sum = 0;
    for (int d : x.coords()) sum += d;
    return static_cast<int>(sum % x.bundles()) + 1;
}

std::vector<KnifeVector> ElementarySimplex::vertices() const {
    std::vector<KnifeVector> out;
    out.reserve(bundles());
    out.push_back(base);
    std::vector<int> cur = base.coords();
    for (int knife : steps) {
        ++cur[knife];
        out.emplace_back(base.items(), cur);
    }
    return out;
}

ElementarySimplex simplex_from_vertices(int items,
                                        const std::vector<std::vector<int>>& vertices) {
    if (vertices.empty()) throw InputError("simplex needs at least one vertex");
    const int knives = static_cast<int>(vertices.front().size());
    if (static_cast<int>(vertices.size()) != knives + 1) {
        throw InputError("a simplex over k knives needs exactly k+1 vertices");
    }
    auto sorted = vertices;
    for (const auto& coords : sorted) {
        if (static_cast<int>(coords.size()) != knives) {
            throw InputError("simplex vertices must have equal dimension");
        }
        KnifeVector(items, coords);  // bounds and ordering check
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0LL) <
               std::accumulate(b.begin(), b.end(), 0LL);
    });
    std::vector<int> steps;
    std::vector<char> seen(knives, 0);
    for (size_t v = 1; v < sorted.size(); ++v) {
        int moved = -1;
        for (int k = 0; k < knives; ++k) {
            if (sorted[v][k] == sorted[v - 1][k]) continue;
            if (sorted[v][k] != sorted[v - 1][k] + 1 || moved != -1) {
                throw InputError("consecutive simplex vertices must differ by one half-step");
            }
            moved = k;
        }
        if (moved == -1 || seen[moved]) {
            throw InputError("each knife must advance exactly once across the simplex");
        }
        seen[moved] = 1;
        steps.push_back(moved);
    }
    return ElementarySimplex{KnifeVector(items, sorted.front()), steps};
}

SimplexDecomposition decompose(const ElementarySimplex& simplex) {
    const int n = simplex.bundles();
    SimplexDecomposition dec;
    dec.fixed.assign(n, Interval::empty());
    dec.contested.resize(n - 1);
    const auto verts = simplex.vertices();
    for (int j = 1; j <= n; ++j) {
        Interval common = verts.front().bundle(j);
        for (size_t k = 1; k < verts.size(); ++k) common = intersect(common, verts[k].bundle(j));
        dec.fixed[j - 1] = common;
    }
    for (int k = 1; k <= n - 1; ++k) {
        // The knife takes doubled values d and d+1; exactly one is even, and
        // the item it covers there is the contested one.
        dec.contested[k - 1] = (simplex.base.doubled(k) + 1) / 2;
        if (k > 1 && dec.contested[k - 1] < dec.contested[k - 2]) {
            throw InternalError("contested items out of order in balanced chain");
        }
    }
    return dec;
}

bool fully_appears(const ElementarySimplex& simplex, int item, int j) {
    std::vector<int> cur = simplex.base.coords();
    auto visible = [&](const std::vector<int>& coords) {
        const int left = (j >= 2) ? coords[j - 2] : 1;
        const int right = (j <= simplex.bundles() - 1) ? coords[j - 1]
                                                       : 2 * simplex.items() + 1;
        return left < 2 * item && 2 * item < right;
    };
    if (visible(cur)) return true;
    for (int knife : simplex.steps) {
        ++cur[knife];
        if (visible(cur)) return true;
    }
    return false;
}

void for_each_simplex(int items, int bundles,
                      const std::function<bool(const ElementarySimplex&)>& fn) {
    if (items < 1 || bundles < 1) throw InputError("simplex enumeration needs m >= 1, n >= 1");
    const int knives = bundles - 1;
    if (knives == 0) {
        fn(ElementarySimplex{KnifeVector(items, {}), {}});
        return;
    }
    // Valid bases leave room for the final +1/2 in every coordinate.
    for (const auto& base : nondecreasing_tuples(knives, 1, 2 * items)) {
        std::vector<int> steps(knives);
        std::iota(steps.begin(), steps.end(), 0);
        do {
            // Advancing knife k breaks ordering only against knife k+1, and
            // only when they currently share a position.
            std::vector<int> cur = base;
            bool ok = true;
            for (int k : steps) {
                ++cur[k];
                if (k + 1 < knives && cur[k] > cur[k + 1]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (!fn(ElementarySimplex{KnifeVector(items, base), steps})) return;
        } while (std::next_permutation(steps.begin(), steps.end()));
    }
}

std::uint64_t count_simplices(int items, int bundles) {
    std::uint64_t count = 0;
    for_each_simplex(items, bundles, [&](const ElementarySimplex&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<std::vector<int>> nondecreasing_tuples(int length, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    if (lo > hi) return out;
    std::vector<int> cur(length, lo);
    while (true) {
        out.push_back(cur);
        int pos = length - 1;
        while (pos >= 0 && cur[pos] == hi) --pos;
        if (pos < 0) break;
        const int next = cur[pos] + 1;
        for (int k = pos; k < length; ++k) cur[k] = next;
    }
    return out;
}

std::vector<KnifeVector> all_vertices(int items, int bundles) {
    std::vector<KnifeVector> out;
    for (auto& coords : nondecreasing_tuples(bundles - 1, 1, 2 * items + 1)) {
        out.emplace_back(items, std::move(coords));
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / i;
    }
    return result;
}

std::uint64_t vertex_count(int items, int bundles) {
    return binomial(2 * items + bundles - 1, bundles - 1);
}

std::uint64_t vertex_rank(const KnifeVector& x) {
    // Tuples below x: for each position, count completions of every strictly
    // smaller prefix. Non-decreasing tuples of length `len` over [v, L] number
    // C(L - v + len, len); summed over v via the hockey-stick identity.
    const int L = 2 * x.items() + 1;
    const int d = x.knives();
    std::uint64_t rank = 0;
    int prev = 1;
    for (int i = 0; i < d; ++i) {
        const int len = d - i - 1;
        const int ti = x.coords()[i];
        if (ti > prev) {
            rank += binomial(L - prev + len + 1, len + 1) -
                    binomial(L - ti + 1 + len, len + 1);
        }
        prev = ti;
    }
    return rank;
}

}  // namespace pathdiv
