#pragma once

#include <cstdint>

#include "pathdiv/instance.hpp"

namespace pathdiv {

// Deterministic additive instance: one std::mt19937_64 seeded with `seed`,
// drawn agent-major then item-minor, each value = next() % (max_value + 1).
// mt19937_64's output sequence is pinned by the C++ standard, so any
// implementation of this recipe reproduces the same instance byte for byte.
Instance generate_additive(std::uint64_t seed, int agents, int items,
                           std::int64_t max_value);

}  // namespace pathdiv
