#pragma once

#include <utility>
#include <vector>

namespace ohc {

// Kuhn's augmenting-path maximum matching. adj[l] lists right-vertices
// of left-vertex l, ascending. Returns match_of_left (-1 = unmatched).
std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::vector<int>>& adj);

// Matching of size >= k among arbitrary edges on integer vertices
// (vertex-disjoint edge set). Greedy plus an exact search on the standard
// kernel when the greedy answer is short. Empty result = none exists.
std::vector<std::pair<int, int>> matching_of_size(
    const std::vector<std::pair<int, int>>& edges, int k);

}  // namespace ohc
