#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ohc/generators.hpp"
#include "ohc/oracle.hpp"

using namespace ohc;

namespace {

// Independent ground truth: try all n! assignments.
bool brute_force_exists(const Digraph& g, const CyclePattern& c) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    do {
        if (validate_embedding(g, c, Embedding{perm})) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("oracle finds the directed cycle itself") {
    for (int n : {4, 7, 10}) {
        Digraph g(n);
        for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
        auto e = oracle_embed(g, CyclePattern::all_forward(n));
        REQUIRE(e.has_value());
        CHECK(validate_embedding(g, CyclePattern::all_forward(n), *e));
        CHECK(!oracle_embed(g, CyclePattern::from_string(std::string(n - 1, 'F') + "B")));
    }
}

TEST_CASE("two cliques embed nothing") {
    Digraph g = two_cliques(8);
    for (const auto& p : all_patterns(8, true))
        CHECK(!oracle_embed(g, p));
}

TEST_CASE("odd complete bipartite digraph embeds nothing") {
    Digraph g = complete_bipartite_digraph(7);
    CHECK(!oracle_embed(g, CyclePattern::all_forward(7)));
}

TEST_CASE("oracle agrees with permutation enumeration on 100 random pairs") {
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        int n = 5 + rng.below(2);
        Digraph g = random_min_semidegree(n, 2, 1000 + it);
        std::string s;
        for (int i = 0; i < n; ++i) s += rng.below(2) ? 'F' : 'B';
        CyclePattern c = CyclePattern::from_string(s);
        auto found = oracle_embed(g, c);
        CHECK(found.has_value() == brute_force_exists(g, c));
        if (found) CHECK(validate_embedding(g, c, *found));
    }
}

TEST_CASE("serial and parallel oracle agree, including node counts") {
    for (int it = 0; it < 30; ++it) {
        Digraph g = random_min_semidegree(9, 5, 7000 + it);
        Rng rng(it);
        std::string s;
        for (int i = 0; i < 9; ++i) s += rng.below(2) ? 'F' : 'B';
        CyclePattern c = CyclePattern::from_string(s);
        OracleStats st_s, st_p;
        auto es = oracle_embed_serial(g, c, {}, &st_s);
        auto ep = oracle_embed(g, c, {}, &st_p);
        CHECK(es.has_value() == ep.has_value());
        CHECK(st_s.nodes == st_p.nodes);
        if (es) CHECK(es->images == ep->images);
    }
}

TEST_CASE("oracle result invariant under relabelling and reversal") {
    Rng rng(17);
    for (int it = 0; it < 25; ++it) {
        int n = 6;
        Digraph g = random_min_semidegree(n, 3, 300 + it);
        std::string s;
        for (int i = 0; i < n; ++i) s += rng.below(2) ? 'F' : 'B';
        CyclePattern c = CyclePattern::from_string(s);
        bool base = oracle_embed(g, c).has_value();

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        rng.shuffle(perm);
        Digraph gp(n);
        for (int u = 0; u < n; ++u)
            g.out(u).for_each([&](int v) { gp.add_arc(perm[u], perm[v]); });
        CHECK(oracle_embed(gp, c).has_value() == base);
        CHECK(oracle_embed(g.reversed(), c.edge_reversed()).has_value() == base);
    }
}

TEST_CASE("oracle refuses oversized instances") {
    Digraph g = complete_digraph(15);
    CHECK_THROWS(oracle_embed(g, CyclePattern::all_forward(15)));
    OracleOptions opt;
    opt.limit = 15;
    CHECK(oracle_embed(g, CyclePattern::all_forward(15), opt).has_value());
}

TEST_CASE("pattern enumeration") {
    CHECK(all_patterns(3, false).size() == 8);
    // Burnside-style independent count: orbits of the 8-element action
    auto pats = all_patterns(4, false);
    std::set<uint32_t> orbit_reps;
    auto mask = [](const CyclePattern& p) {
        uint32_t m = 0;
        for (int i = 0; i < p.n(); ++i)
            if (p.dir(i) == Dir::Backward) m |= 1u << i;
        return m;
    };
    for (const auto& p : pats) {
        uint32_t mn = mask(p);
        for (int r = 0; r < 4; ++r) {
            CyclePattern q = p.rotated(r);
            mn = std::min({mn, mask(q), mask(q.reversed_traversal())});
        }
        orbit_reps.insert(mn);
    }
    CHECK(all_patterns(4, true).size() == orbit_reps.size());
    // antidirected representative exists iff n even
    bool anti4 = false, anti5 = false;
    for (const auto& p : all_patterns(4, true)) anti4 |= p.antidirected();
    for (const auto& p : all_patterns(5, true)) anti5 |= p.antidirected();
    CHECK(anti4);
    CHECK(!anti5);
}

TEST_CASE("symmetry-reduced patterns preserve oracle verdicts") {
    // every pattern embeds iff its canonical representative does
    Digraph g = random_min_semidegree(6, 3, 99);
    auto reps = all_patterns(6, true);
    auto raw = all_patterns(6, false);
    int raw_yes = 0;
    for (const auto& p : raw) raw_yes += oracle_embed(g, p).has_value();
    int rep_yes = 0, rep_weight = 0;
    for (const auto& p : reps) {
        // orbit size: count raw patterns equivalent to p
        int orbit = 0;
        for (const auto& q : raw) {
            bool eq = false;
            for (int r = 0; r < 6 && !eq; ++r) {
                CyclePattern qr = q.rotated(r);
                if (qr == p || qr.reversed_traversal() == p) eq = true;
            }
            orbit += eq;
        }
        rep_weight += orbit;
        if (oracle_embed(g, p)) rep_yes += orbit;
    }
    CHECK(rep_weight == 64);
    CHECK(rep_yes == raw_yes);
}
