#include "ohc/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ohc {

namespace {

bool try_augment(int l, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& match_l, std::vector<int>& match_r,
                 std::vector<char>& visited) {
    for (int r : adj[l]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (match_r[r] < 0 ||
            try_augment(match_r[r], adj, match_l, match_r, visited)) {
            match_l[l] = r;
            match_r[r] = l;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        const std::vector<std::vector<int>>& adj) {
    std::vector<int> match_l(n_left, -1), match_r(n_right, -1);
    for (int l = 0; l < n_left; ++l) {
        std::vector<char> visited(n_right, 0);
        try_augment(l, adj, match_l, match_r, visited);
    }
    return match_l;
}

namespace {

bool kernel_search(const std::vector<std::pair<int, int>>& edges, size_t idx,
                   int need, std::set<int>& used,
                   std::vector<std::pair<int, int>>& out) {
    if (need == 0) return true;
    if (idx >= edges.size()) return false;
    if (int(edges.size() - idx) < need) return false;
    auto [u, v] = edges[idx];
    if (!used.count(u) && !used.count(v)) {
        used.insert(u);
        used.insert(v);
        out.push_back(edges[idx]);
        if (kernel_search(edges, idx + 1, need - 1, used, out)) return true;
        out.pop_back();
        used.erase(u);
        used.erase(v);
    }
    return kernel_search(edges, idx + 1, need, used, out);
}

}  // namespace

std::vector<std::pair<int, int>> matching_of_size(
    const std::vector<std::pair<int, int>>& edges, int k) {
    if (k <= 0) return {};
    // greedy maximal, lexicographic
    std::set<int> used;
    std::vector<std::pair<int, int>> greedy;
    for (auto [u, v] : edges)
        if (u != v && !used.count(u) && !used.count(v)) {
            greedy.emplace_back(u, v);
            used.insert(u);
            used.insert(v);
        }
    if (int(greedy.size()) >= k) {
        greedy.resize(k);
        return greedy;
    }
    // nu <= 2*|greedy| < 2k: every edge meets a greedy vertex, so keep a
    // small kernel (k+1 outside-edges per covered vertex) and search it.
    std::map<int, int> quota;
    std::vector<std::pair<int, int>> kernel;
    for (auto [u, v] : edges) {
        if (u == v) continue;
        bool cu = used.count(u), cv = used.count(v);
        if (cu && cv) {
            kernel.emplace_back(u, v);
        } else if (cu || cv) {
            int c = cu ? u : v;
            if (quota[c] < k + 1) {
                ++quota[c];
                kernel.emplace_back(u, v);
            }
        }
    }
    std::set<int> used2;
    std::vector<std::pair<int, int>> out;
    if (kernel_search(kernel, 0, k, used2, out)) return out;
    return {};
}

}  // namespace ohc
