#pragma once

#include <vector>

namespace pathdiv {

// Maximum bipartite matching via augmenting paths; plenty at the graph sizes
// here (at most a handful of vertices per side). Deterministic: left vertices
// are processed in index order, neighbors in the order given.
struct Matching {
    std::vector<int> left_to_right;  // -1 when unmatched
    int size = 0;
};

// adj[l] lists the right neighbors of left vertex l (0-based).
Matching max_bipartite_matching(const std::vector<std::vector<int>>& adj, int num_right);

}  // namespace pathdiv
