#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/generators.hpp"
#include "ohc/oracle.hpp"

using namespace ohc;

TEST_CASE("two cliques") {
    Digraph g = two_cliques(6);
    CHECK(min_semidegree(g) == 2);
    CHECK(!oracle_embed(two_cliques(8), CyclePattern::all_forward(8)));
    CHECK_THROWS(two_cliques(7));
}

TEST_CASE("complete bipartite digraph") {
    Digraph g7 = complete_bipartite_digraph(7);
    CHECK(min_semidegree(g7) == 3);
    Digraph g8 = complete_bipartite_digraph(8);
    CHECK(oracle_embed(g8, CyclePattern::all_forward(8)).has_value());
    CHECK(oracle_embed(g8, CyclePattern::alternating(8)).has_value());
}

TEST_CASE("random generator respects the degree floor and is reproducible") {
    for (int seed = 0; seed < 100; ++seed) {
        Digraph g = random_min_semidegree(8, 4, seed);
        CHECK(min_semidegree(g) >= 4);
        CHECK(g.arc_count() >= 8 * 4);
    }
    CHECK(random_min_semidegree(9, 5, 3) == random_min_semidegree(9, 5, 3));
    CHECK(random_min_semidegree(9, 9 - 1, 3) == complete_digraph(9));
}

TEST_CASE("synthetic generators reproduce byte-identically") {
    ConstantsProfile p = ConstantsProfile::desk();
    auto a1 = synthetic_ST(120, p, 5), a2 = synthetic_ST(120, p, 5);
    CHECK(a1.g == a2.g);
    auto b1 = synthetic_AB(120, p, 5), b2 = synthetic_AB(120, p, 5);
    CHECK(b1.g == b2.g);
    auto c1 = synthetic_ABST(120, p, 5), c2 = synthetic_ABST(120, p, 5);
    CHECK(c1.g == c2.g);
}

TEST_CASE("synthetic instances meet the degree precondition") {
    ConstantsProfile p = ConstantsProfile::desk();
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        CHECK(min_semidegree(synthetic_ST(100 + 7 * int(seed), p, seed).g) >= 50);
        CHECK(min_semidegree(synthetic_AB(100 + 7 * int(seed), p, seed).g) >= 50);
        CHECK(min_semidegree(synthetic_ABST(104, p, seed).g) >= 52);
    }
}

TEST_CASE("census of antidirected obstructions at m=2") {
    auto obs = search_antidirected_obstructions(2);
    CHECK(!obs.empty());
    CyclePattern anti = CyclePattern::alternating(4);
    OracleOptions opt;
    opt.limit = 4;
    for (const auto& g : obs) {
        CHECK(min_semidegree(g) >= 2);
        CHECK(!oracle_embed(g, anti, opt));
    }
    CHECK_THROWS(search_antidirected_obstructions(4));
}

TEST_CASE("f family resources match the caption constraints") {
    for (int variant : {1, 2})
        for (int m : {2, 3, 4, 5}) {
            auto inst = f_family(variant, m, OHC_RESOURCE_DIR);
            CHECK(inst.g.n() == 2 * m);
            CHECK(min_semidegree(inst.g) == m);
            CHECK(inst.A.count() == m - 1);
            CHECK(inst.B.count() == m - 1);
        }
}

TEST_CASE("f family has no antidirected cycle but a consistent one") {
    for (int variant : {1, 2})
        for (int m : {2, 3}) {
            auto inst = f_family(variant, m, OHC_RESOURCE_DIR);
            OracleOptions opt;
            opt.limit = 2 * m;
            CHECK(!oracle_embed(inst.g, CyclePattern::alternating(2 * m), opt));
            CHECK(oracle_embed(inst.g, CyclePattern::all_forward(2 * m), opt).has_value());
        }
}

namespace {

bool isomorphic(const Digraph& g, const Digraph& h) {
    if (g.n() != h.n() || g.arc_count() != h.arc_count()) return false;
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = 0; v < g.n() && ok; ++v)
                if (u != v && g.has_arc(u, v) != h.has_arc(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("resources are byte-identical to the builder") {
    for (int variant : {1, 2})
        for (int m : {2, 3, 4, 5}) {
            auto built = f_family_build(variant, m);
            auto loaded = f_family(variant, m, OHC_RESOURCE_DIR);
            CHECK(built.g == loaded.g);
            CHECK(built.A == loaded.A);
            CHECK(built.B == loaded.B);
        }
}

TEST_CASE("both families appear in the exhaustive m=2 census") {
    auto obs = search_antidirected_obstructions(2);
    auto f1 = f_family_build(1, 2), f2 = f_family_build(2, 2);
    CHECK(!isomorphic(f1.g, f2.g));
    int hits = 0;
    for (const auto& g : obs) {
        if (isomorphic(g, f1.g)) ++hits;
        if (isomorphic(g, f2.g)) ++hits;
    }
    CHECK(hits == 2);
}
