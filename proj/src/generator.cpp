#include "pathdiv/generator.hpp"

#include <random>

#include "pathdiv/errors.hpp"

namespace pathdiv {

Instance generate_additive(std::uint64_t seed, int agents, int items,
                           std::int64_t max_value) {
    if (agents < 1 || items < 1) throw InputError("generator needs n >= 1 and m >= 1");
    if (max_value < 0) throw InputError("generator needs max_value >= 0");
    std::mt19937_64 rng(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(max_value) + 1;
    std::vector<std::vector<Rational>> values(agents);
    for (auto& row : values) {
        row.reserve(items);
        for (int g = 0; g < items; ++g) {
            row.emplace_back(static_cast<std::int64_t>(rng() % span));
        }
    }
    return Instance::additive(std::move(values));
}

}  // namespace pathdiv
