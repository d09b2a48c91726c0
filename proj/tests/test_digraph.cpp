#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/digraph.hpp"
#include "ohc/generators.hpp"

using namespace ohc;

TEST_CASE("vertex set basics") {
    VertexSet s(130);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    CHECK(!s.test(63));
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 64);
    CHECK(s.next(64) == 129);
    CHECK(s.next(129) == -1);
    VertexSet c = s.complement();
    CHECK(c.count() == 127);
    CHECK((s & c).empty());
    CHECK((s | c).count() == 130);
}

TEST_CASE("min semidegree examples") {
    CHECK(min_semidegree(complete_digraph(6)) == 5);
    Digraph c3(3);
    c3.add_arc(0, 1);
    c3.add_arc(1, 2);
    c3.add_arc(2, 0);
    CHECK(min_semidegree(c3) == 1);
}

TEST_CASE("digraph invariants") {
    Digraph g(4);
    g.add_arc(0, 1);
    g.add_arc(1, 0);
    g.add_arc(2, 3);
    CHECK(g.has_digon(0, 1));
    CHECK(!g.has_digon(2, 3));
    CHECK_THROWS(g.add_arc(2, 2));
    // transpose consistency
    for (int v = 0; v < 4; ++v)
        g.out(v).for_each([&](int u) { CHECK(g.in(u).test(v)); });
    Digraph r = g.reversed();
    CHECK(r.has_arc(1, 0));
    CHECK(r.has_arc(3, 2));
    CHECK(!r.has_arc(2, 3));
}

TEST_CASE("text format round trip is bit exact") {
    Digraph g(3);
    g.add_arc(1, 2);
    g.add_arc(0, 2);
    g.add_arc(0, 1);
    std::string t = g.to_text();
    CHECK(t == "digraph v1\nn 3\ne 0 1\ne 0 2\ne 1 2\n");
    Digraph h = Digraph::from_text(t);
    CHECK(h == g);
    CHECK(h.to_text() == t);
    CHECK_THROWS(Digraph::from_text("garbage\n"));
}

TEST_CASE("arcs between sets") {
    Digraph g = complete_bipartite_digraph(6);
    VertexSet u = VertexSet::of(6, {0, 1, 2}), v = VertexSet::of(6, {3, 4, 5});
    CHECK(g.arcs_between(u, v) == 9);
    CHECK(g.arcs_between(u, u) == 0);
}
