#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/generators.hpp"
#include "ohc/pattern.hpp"

using namespace ohc;

TEST_CASE("sink and source counts") {
    CHECK(CyclePattern::all_forward(8).sink_count() == 0);
    CHECK(CyclePattern::alternating(6).sink_count() == 3);
    CyclePattern p = CyclePattern::from_string("FFBFBB");
    CHECK(p.sink_count() == 2);
    CHECK(p.source_count() == 2);
}

TEST_CASE("sink equals source for random patterns") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + rng.below(12);
        std::string s;
        for (int i = 0; i < n; ++i) s += rng.below(2) ? 'F' : 'B';
        CyclePattern p = CyclePattern::from_string(s);
        CHECK(p.sink_count() == p.source_count());
        if (p.antidirected()) {
            CHECK(n % 2 == 0);
            CHECK(p.sink_count() == n / 2);
        }
        if (p.consistent()) CHECK(p.sink_count() == 0);
    }
}

TEST_CASE("cycle distance") {
    CyclePattern p = CyclePattern::all_forward(10);
    CHECK(p.distance(0, 9) == 9);
    CHECK(p.distance(9, 0) == 1);
    CHECK(p.distance(4, 4) == 0);
}

TEST_CASE("validate embedding on the directed triangle") {
    Digraph tri(3);
    tri.add_arc(0, 1);
    tri.add_arc(1, 2);
    tri.add_arc(2, 0);
    Embedding e{{0, 1, 2}};
    CHECK(validate_embedding(tri, CyclePattern::all_forward(3), e));
    CHECK(!validate_embedding(tri, CyclePattern::from_string("BBB"), e));
    Embedding bad{{0, 1, 1}};
    CHECK(!validate_embedding(tri, CyclePattern::all_forward(3), bad));
}

TEST_CASE("complete digraph accepts any pattern and permutation") {
    Digraph k5 = complete_digraph(5);
    Rng rng(3);
    for (int it = 0; it < 50; ++it) {
        std::string s;
        for (int i = 0; i < 5; ++i) s += rng.below(2) ? 'F' : 'B';
        std::vector<int> perm{0, 1, 2, 3, 4};
        rng.shuffle(perm);
        CHECK(validate_embedding(k5, CyclePattern::from_string(s), Embedding{perm}));
    }
}

TEST_CASE("rotation invariance of validation") {
    Digraph g = random_min_semidegree(8, 4, 42);
    CyclePattern c = CyclePattern::from_string("FFBFBBFF");
    Embedding e{{0, 1, 2, 3, 4, 5, 6, 7}};
    bool base = validate_embedding(g, c, e);
    for (int r = 1; r < 8; ++r) {
        CyclePattern cr = c.rotated(r);
        std::vector<int> img(8);
        for (int i = 0; i < 8; ++i) img[i] = e.images[(i + r) % 8];
        CHECK(validate_embedding(g, cr, Embedding{img}) == base);
    }
}

TEST_CASE("transpose duality") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        Digraph g = random_min_semidegree(7, 3, 100 + it);
        std::string s;
        for (int i = 0; i < 7; ++i) s += rng.below(2) ? 'F' : 'B';
        CyclePattern c = CyclePattern::from_string(s);
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
        rng.shuffle(perm);
        Embedding e{perm};
        CHECK(validate_embedding(g, c, e) ==
              validate_embedding(g.reversed(), c.edge_reversed(), e));
    }
}

TEST_CASE("partial embeddings") {
    Digraph tri(3);
    tri.add_arc(0, 1);
    tri.add_arc(1, 2);
    tri.add_arc(2, 0);
    CyclePattern c = CyclePattern::all_forward(3);
    CHECK(validate_partial(tri, c, {0, {1}}));
    CHECK(validate_partial(tri, c, {0, {0, 1}}));
    CHECK(!validate_partial(tri, c, {0, {1, 0}}));
    CHECK(!validate_partial(tri, c, {0, {0, 0}}));
    CHECK(validate_partial(tri, c, {2, {2, 0, 1}}));
}

TEST_CASE("pattern string round trip") {
    CyclePattern p = CyclePattern::from_string("FBBFF");
    CHECK(p.to_string() == "FBBFF");
    CHECK_THROWS(CyclePattern::from_string("FX"));
    CHECK_THROWS(CyclePattern::from_string("FB"));
}
