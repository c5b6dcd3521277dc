#include "pathdiv/matching.hpp"

namespace pathdiv {
namespace {

bool augment(const std::vector<std::vector<int>>& adj, int left,
             std::vector<int>& right_to_left, std::vector<char>& visited) {
    for (int r : adj[left]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (right_to_left[r] == -1 || augment(adj, right_to_left[r], right_to_left, visited)) {
            right_to_left[r] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching max_bipartite_matching(const std::vector<std::vector<int>>& adj, int num_right) {
    const int num_left = static_cast<int>(adj.size());
    std::vector<int> right_to_left(num_right, -1);
    Matching result;
    result.left_to_right.assign(num_left, -1);
    for (int l = 0; l < num_left; ++l) {
        std::vector<char> visited(num_right, 0);
        if (augment(adj, l, right_to_left, visited)) ++result.size;
    }
    for (int r = 0; r < num_right; ++r) {
        if (right_to_left[r] != -1) result.left_to_right[right_to_left[r]] = r;
    }
    return result;
}

}  // namespace pathdiv
