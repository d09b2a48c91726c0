#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/dense_hamilton.hpp"
#include "ohc/generators.hpp"
#include "ohc/oracle.hpp"

using namespace ohc;

namespace {

Ugraph complete_graph(int n) {
    Ugraph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) h.add_edge(u, v);
    return h;
}

std::vector<Dir> random_dirs(Rng& rng, int len) {
    std::vector<Dir> d(len);
    for (auto& x : d) x = rng.below(2) ? Dir::Forward : Dir::Backward;
    return d;
}

}  // namespace

TEST_CASE("dirac cycle on K5 and a tight instance") {
    auto cyc = dirac_hamilton_cycle(complete_graph(5));
    CHECK(cyc.size() == 5);

    // K33 plus one intra-class edge has min degree 3 = n/2
    Ugraph h(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) h.add_edge(u, v);
    h.add_edge(0, 1);
    auto c2 = dirac_hamilton_cycle(h);
    CHECK(c2.size() == 6);

    Ugraph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK_THROWS(dirac_hamilton_cycle(c6));
}

TEST_CASE("dirac on random tight graphs") {
    Rng rng(2);
    for (int it = 0; it < 60; ++it) {
        int n = 6 + rng.below(30);
        Ugraph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < 0.62) h.add_edge(u, v);
        // lift to the Dirac floor
        for (int v = 0; v < n; ++v)
            for (int u = 0; 2 * h.degree(v) < n && u < n; ++u)
                if (u != v && !h.has_edge(u, v)) h.add_edge(u, v);
        auto cyc = dirac_hamilton_cycle(h);
        CHECK(int(cyc.size()) == n);
    }
}

TEST_CASE("moon moser cycles") {
    // K66
    Ugraph h(12);
    VertexSet a(12), b(12);
    for (int u = 0; u < 6; ++u) a.set(u);
    for (int v = 6; v < 12; ++v) b.set(v);
    for (int u = 0; u < 6; ++u)
        for (int v = 6; v < 12; ++v) h.add_edge(u, v);
    CHECK(moon_moser_cycle(h, a, b).size() == 12);

    // K44 minus a perfect matching, min degree 3 = n/2+1
    Ugraph h2(8);
    VertexSet a2(8), b2(8);
    for (int u = 0; u < 4; ++u) a2.set(u);
    for (int v = 4; v < 8; ++v) b2.set(v);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v)
            if (v - 4 != u) h2.add_edge(u, v);
    CHECK(moon_moser_cycle(h2, a2, b2).size() == 8);

    VertexSet a3(12), b3(12);
    for (int u = 0; u < 5; ++u) a3.set(u);
    for (int v = 5; v < 12; ++v) b3.set(v);
    CHECK_THROWS(moon_moser_cycle(h, a3, b3));
}

TEST_CASE("any orientation hamilton path on complete digraphs") {
    Rng rng(4);
    Digraph g = complete_digraph(10);
    for (int it = 0; it < 20; ++it) {
        auto dirs = random_dirs(rng, 9);
        OrientedPath p = any_orientation_hamilton_path(g, 0, 1, dirs);
        CHECK(p.vertices.front() == 0);
        CHECK(p.vertices.back() == 1);
        CHECK(p.dirs == dirs);
        CHECK(p.validate(g));
    }
    // circulant with semidegree exactly 3n/4: the contraction of the
    // antipodal pair 0,6 falls below the Dirac bound
    Digraph weak(12);
    for (int v = 0; v < 12; ++v)
        for (int k = 1; k <= 9; ++k) weak.add_arc(v, (v + k) % 12);
    CHECK(4 * min_semidegree(weak) == 3 * 12);
    CHECK_THROWS(any_orientation_hamilton_path(weak, 0, 6, random_dirs(rng, 11)));
}

TEST_CASE("hamilton path with a deleted arc bundle, oracle cross check") {
    Rng rng(9);
    for (int it = 0; it < 10; ++it) {
        int n = 12;
        Digraph g = complete_digraph(n);
        // drop n/8 arcs at one vertex, keeping the semidegree floor
        int drop = n / 8;
        for (int j = 0; j < drop; ++j) g.remove_arc(2, 3 + j);
        auto dirs = random_dirs(rng, n - 1);
        OrientedPath p = any_orientation_hamilton_path(g, 0, 1, dirs);
        CHECK(p.validate(g));
    }
}

TEST_CASE("bipartite any orientation path") {
    Rng rng(6);
    // complete bipartite 11/10
    int m = 10, n = 2 * m + 1;
    Digraph g(n);
    VertexSet big(n), small(n);
    for (int v = 0; v <= m; ++v) big.set(v);
    for (int v = m + 1; v < n; ++v) small.set(v);
    big.for_each([&](int u) {
        small.for_each([&](int v) {
            g.add_arc(u, v);
            g.add_arc(v, u);
        });
    });
    for (int it = 0; it < 10; ++it) {
        auto dirs = random_dirs(rng, n - 1);
        OrientedPath p = any_orientation_hamilton_path_bipartite(g, big, small, 0, 1, dirs);
        CHECK(p.validate(g));
        CHECK(p.dirs == dirs);
    }
    CHECK_THROWS(any_orientation_hamilton_path_bipartite(g, big, small, m + 1, 0,
                                                         random_dirs(rng, n - 1)));
}

TEST_CASE("dense path existence agrees with the oracle on small instances") {
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        int n = 8 + 2 * rng.below(4);  // 8..14
        Digraph g = complete_digraph(n);
        // random sparse deletions keeping semidegree >= 7n/8
        for (int tries = 0; tries < n; ++tries) {
            int u = rng.below(n), v = rng.below(n);
            if (u == v || !g.has_arc(u, v)) continue;
            g.remove_arc(u, v);
            if (8 * min_semidegree(g) < 7 * n) {
                g.add_arc(u, v);
            }
        }
        auto dirs = random_dirs(rng, n - 1);
        OrientedPath p = any_orientation_hamilton_path(g, 0, 1, dirs);
        CHECK(p.validate(g));
    }
}
