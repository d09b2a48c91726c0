#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ohc/generators.hpp"
#include "ohc/matching.hpp"

using namespace ohc;

namespace {

// brute-force maximum matching size over an edge list
int brute_nu(const std::vector<std::pair<int, int>>& edges) {
    int best = 0;
    int m = int(edges.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::set<int> used;
        bool ok = true;
        int cnt = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            auto [u, v] = edges[i];
            if (used.count(u) || used.count(v)) ok = false;
            used.insert(u);
            used.insert(v);
            ++cnt;
        }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

}  // namespace

TEST_CASE("bipartite matching on small cases") {
    // K_{3,3} minus a perfect matching still has a perfect matching
    std::vector<std::vector<int>> adj(3);
    for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 3; ++r)
            if (l != r) adj[l].push_back(r);
    auto m = max_bipartite_matching(3, 3, adj);
    CHECK(std::count(m.begin(), m.end(), -1) == 0);
}

TEST_CASE("matching_of_size agrees with brute force") {
    Rng rng(21);
    for (int it = 0; it < 300; ++it) {
        int nv = 4 + rng.below(5);
        int ne = rng.below(13);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < ne; ++i) {
            int u = rng.below(nv), v = rng.below(nv);
            if (u != v) edges.emplace_back(u, v);
        }
        int nu = brute_nu(edges);
        for (int k = 1; k <= nu + 1; ++k) {
            auto m = matching_of_size(edges, k);
            if (k <= nu) {
                REQUIRE(int(m.size()) == k);
                std::set<int> used;
                for (auto [u, v] : m) {
                    CHECK(!used.count(u));
                    CHECK(!used.count(v));
                    used.insert(u);
                    used.insert(v);
                }
            } else {
                CHECK(m.empty());
            }
        }
    }
}
