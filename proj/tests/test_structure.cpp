#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/generators.hpp"
#include "ohc/structure.hpp"

using namespace ohc;

TEST_CASE("profile text round trip and chain report") {
    ConstantsProfile p = ConstantsProfile::desk();
    ConstantsProfile q = ConstantsProfile::from_text(p.to_text());
    CHECK(q.nu == p.nu);
    CHECK(q.eps4 == p.eps4);
    // the pinned desk profile breaks the chain at tau <= eps3 by design
    auto viol = p.chain_violations();
    CHECK(!viol.empty());
    CHECK_THROWS(ConstantsProfile::from_text("nu=1.5\n"));
    CHECK_THROWS(ConstantsProfile::from_text("bogus=0.1\n"));
}

TEST_CASE("robust outneighbourhood examples") {
    Digraph k10 = complete_digraph(10);
    VertexSet s = VertexSet::of(10, {0, 1, 2});
    CHECK(robust_outneighbourhood(k10, s, 0.2).count() == 10);
    CHECK(robust_outneighbourhood(k10, VertexSet(10), 0.2).empty());

    Digraph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_arc(i, (i + 1) % 6);
    VertexSet s6 = VertexSet::of(6, {0, 1, 2});
    VertexSet rn = robust_outneighbourhood(c6, s6, 0.15);
    CHECK(rn == VertexSet::of(6, {1, 2, 3}));
}

TEST_CASE("monotonicity of the robust outneighbourhood") {
    Rng rng(13);
    for (int it = 0; it < 30; ++it) {
        Digraph g = random_min_semidegree(12, 6, 400 + it);
        VertexSet small(12), big(12);
        for (int v = 0; v < 12; ++v) {
            if (rng.below(3) == 0) small.set(v);
            if (small.test(v) || rng.below(3) == 0) big.set(v);
        }
        VertexSet rs = robust_outneighbourhood(g, small, 0.1);
        VertexSet rb = robust_outneighbourhood(g, big, 0.1);
        CHECK((rs - rb).empty());
    }
}

TEST_CASE("violating sets for the canonical families") {
    ConstantsProfile p = ConstantsProfile::desk();
    p.nu = 0.05;
    p.tau = 0.3;
    {
        Digraph g = two_cliques(10);
        auto r = find_violating_set(g, p);
        REQUIRE(r.set.has_value());
        CHECK(r.exhaustive);
        int sz = r.set->count();
        VertexSet rn = robust_outneighbourhood(g, *r.set, p.nu);
        CHECK(rn.count() < sz + std::max(1, threshold_count(p.nu, 10)));
    }
    {
        Digraph g = complete_bipartite_digraph(10);
        auto r = find_violating_set(g, p);
        REQUIRE(r.set.has_value());
    }
    {
        Digraph g = complete_digraph(12);
        auto r = find_violating_set(g, ConstantsProfile::desk());
        CHECK(!r.set.has_value());
        CHECK(r.exhaustive);
    }
}

TEST_CASE("random dense digraphs expand") {
    // exhaustive check at n=14, heuristic candidate search at n=40
    ConstantsProfile p = ConstantsProfile::desk();
    Rng rng(3);
    Digraph g14(14);
    for (int u = 0; u < 14; ++u)
        for (int v = 0; v < 14; ++v)
            if (u != v && rng.unit() < 0.6) g14.add_arc(u, v);
    ViolatingSearchBudget b;
    b.exact_limit = 14;
    auto r = find_violating_set(g14, p, b);
    CHECK(!r.set.has_value());
    CHECK(r.exhaustive);

    Digraph g40(40);
    for (int u = 0; u < 40; ++u)
        for (int v = 0; v < 40; ++v)
            if (u != v && rng.unit() < 0.6) g40.add_arc(u, v);
    auto r40 = find_violating_set(g40, p);
    CHECK(!r40.set.has_value());
    CHECK(!r40.exhaustive);
    CHECK(classify(g40, p).tag == ClassTag::ExpanderCandidate);
}

TEST_CASE("classify the extremal families") {
    ConstantsProfile p = ConstantsProfile::desk();
    {
        ExtremalClass ec = classify(two_cliques(60), p);
        CHECK(ec.tag == ClassTag::STExtremal);
        REQUIRE(ec.partition.has_value());
        CHECK(ec.partition->a() == 0);
        CHECK(ec.partition->b() == 0);
        CHECK(ec.certificate.all_pass());
    }
    {
        ExtremalClass ec = classify(complete_bipartite_digraph(60), p);
        CHECK(ec.tag == ClassTag::ABExtremal);
        REQUIRE(ec.partition.has_value());
        CHECK(ec.partition->s() == 0);
        CHECK(ec.partition->t() == 0);
        CHECK(ec.certificate.all_pass());
    }
}

TEST_CASE("classify synthetic instances and certify all clauses") {
    ConstantsProfile p = ConstantsProfile::desk();
    {
        auto inst = synthetic_ST(300, p, 1);
        CHECK(certify_partition(inst.g, inst.partition, ClassTag::STExtremal, p).all_pass());
        ExtremalClass ec = classify(inst.g, p);
        CHECK(ec.tag == ClassTag::STExtremal);
        CHECK(ec.certificate.all_pass());
    }
    {
        auto inst = synthetic_AB(400, p, 1);
        CHECK(certify_partition(inst.g, inst.partition, ClassTag::ABExtremal, p).all_pass());
        ExtremalClass ec = classify(inst.g, p);
        CHECK(ec.tag == ClassTag::ABExtremal);
        CHECK(ec.certificate.all_pass());
    }
    {
        auto inst = synthetic_ABST(600, p, 1);
        CHECK(certify_partition(inst.g, inst.partition, ClassTag::ABSTExtremal, p).all_pass());
        ExtremalClass ec = classify(inst.g, p);
        CHECK(ec.tag == ClassTag::ABSTExtremal);
        CHECK(ec.certificate.all_pass());
    }
}

TEST_CASE("mislabelled certificates fail with named clauses") {
    ConstantsProfile p = ConstantsProfile::desk();
    Digraph g = complete_bipartite_digraph(60);
    VertexPartition part;
    part.A = VertexSet(60);
    part.B = VertexSet(60);
    part.S = VertexSet::of(60, [] {
        std::vector<int> v;
        for (int i = 0; i < 30; ++i) v.push_back(i);
        return v;
    }());
    part.T = part.S.complement();
    Certificate cert = certify_partition(g, part, ClassTag::STExtremal, p);
    CHECK(!cert.all_pass());
    const ClauseResult* p2 = cert.find("P2");
    REQUIRE(p2 != nullptr);
    CHECK(!p2->pass);  // G[S] is empty, so its semidegree is 0
    const ClauseResult* p3 = cert.find("P3");
    REQUIRE(p3 != nullptr);
    CHECK(!p3->pass);
}

TEST_CASE("classification is invariant under relabelling") {
    ConstantsProfile p = ConstantsProfile::desk();
    auto inst = synthetic_AB(120, p, 9);
    ExtremalClass base = classify(inst.g, p);
    Rng rng(1);
    for (int it = 0; it < 3; ++it) {
        std::vector<int> perm(120);
        for (int i = 0; i < 120; ++i) perm[i] = i;
        rng.shuffle(perm);
        Digraph gp(120);
        for (int u = 0; u < 120; ++u)
            inst.g.out(u).for_each([&](int v) { gp.add_arc(perm[u], perm[v]); });
        ExtremalClass ec = classify(gp, p);
        CHECK(ec.tag == base.tag);
        REQUIRE(ec.partition.has_value());
        // set-level equality up to the permutation
        VertexSet mapped(120);
        base.partition->A.for_each([&](int v) { mapped.set(perm[v]); });
        CHECK(mapped == ec.partition->A);
    }
}

TEST_CASE("returned partitions are normalized") {
    ConstantsProfile p = ConstantsProfile::desk();
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        auto inst = synthetic_AB(150, p, seed);
        ExtremalClass ec = classify(inst.g, p);
        REQUIRE(ec.partition.has_value());
        CHECK(ec.partition->a() <= ec.partition->b());
        CHECK(ec.partition->s() <= ec.partition->t());
    }
}

TEST_CASE("structure dichotomy: extracted partition has sparse cross density") {
    ConstantsProfile p = ConstantsProfile::desk();
    for (int n : {12, 14}) {
        Digraph g = two_cliques(n);
        ViolatingSearchBudget b;
        b.exact_limit = n;
        auto r = find_violating_set(g, p, b);
        REQUIRE(r.set.has_value());
        ExtremalClass ec = classify(g, p, b);
        REQUIRE(ec.partition.has_value());
        const auto& pt = *ec.partition;
        const Digraph& host = ec.reversed ? g.reversed() : g;
        long cross = host.arcs_between(pt.A | pt.S, pt.A | pt.T);
        CHECK(cross < p.eps * n * n + 1);
    }
}

TEST_CASE("certificate json shape") {
    ConstantsProfile p = ConstantsProfile::desk();
    auto inst = synthetic_ST(120, p, 2);
    Certificate cert = certify_partition(inst.g, inst.partition, ClassTag::STExtremal, p);
    std::string js = cert.to_json();
    CHECK(js.find("\"clause\":\"P1\"") != std::string::npos);
    CHECK(js.find("measured") != std::string::npos);
}
