#include "ohc/generators.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ohc/oracle.hpp"

namespace ohc {

Digraph complete_digraph(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_arc(u, v);
    return g;
}

Digraph two_cliques(int n) {
    if (n % 2 || n < 4) throw std::invalid_argument("two_cliques: need even n >= 4");
    Digraph g(n);
    int h = n / 2;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (u < h) == (v < h)) g.add_arc(u, v);
    return g;
}

Digraph complete_bipartite_digraph(int n) {
    if (n < 4) throw std::invalid_argument("complete_bipartite_digraph: need n >= 4");
    Digraph g(n);
    int h = n / 2;  // classes [0,h) and [h,n)
    for (int u = 0; u < h; ++u)
        for (int v = h; v < n; ++v) {
            g.add_arc(u, v);
            g.add_arc(v, u);
        }
    return g;
}

Digraph random_min_semidegree(int n, int delta, uint64_t seed) {
    if (delta > n - 1) throw std::invalid_argument("random_min_semidegree: delta > n-1");
    Rng rng(seed);
    Digraph g(n);
    double p = std::min(1.0, (delta + 1.0) / (n - 1.0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.unit() < p) g.add_arc(u, v);
    // repair: lowest-id missing arcs to deficient vertices
    for (int v = 0; v < n; ++v) {
        for (int u = 0; g.out_degree(v) < delta && u < n; ++u)
            if (u != v && !g.has_arc(v, u)) g.add_arc(v, u);
        for (int u = 0; g.in_degree(v) < delta && u < n; ++u)
            if (u != v && !g.has_arc(u, v)) g.add_arc(u, v);
    }
    return g;
}

namespace {

void add_all(Digraph& g, const VertexSet& from, const VertexSet& to) {
    from.for_each([&](int u) {
        to.for_each([&](int v) {
            if (u != v) g.add_arc(u, v);
        });
    });
}

// Splits [0,n) into consecutive blocks of the given sizes.
std::vector<VertexSet> blocks(int n, const std::vector<int>& sizes) {
    std::vector<VertexSet> out;
    int at = 0;
    for (int sz : sizes) {
        VertexSet s(n);
        for (int i = 0; i < sz; ++i) s.set(at++);
        out.push_back(s);
    }
    if (at != n) throw std::logic_error("blocks: sizes do not sum to n");
    return out;
}

// Adds arcs from `sources` into each deficient vertex of `who`, spreading
// the load round-robin so no single source degenerates into a hub.
void lift_in(Digraph& g, const VertexSet& who, const VertexSet& sources, int bound) {
    std::vector<int> src = sources.to_vector();
    if (src.empty()) return;
    size_t rot = 0;
    who.for_each([&](int v) {
        for (size_t i = 0; i < src.size() && g.in_degree(v) < bound; ++i) {
            int u = src[(rot + i) % src.size()];
            if (u != v && !g.has_arc(u, v)) g.add_arc(u, v);
        }
        ++rot;
    });
}

void lift_out(Digraph& g, const VertexSet& who, const VertexSet& targets, int bound) {
    std::vector<int> dst = targets.to_vector();
    if (dst.empty()) return;
    size_t rot = 0;
    who.for_each([&](int v) {
        for (size_t i = 0; i < dst.size() && g.out_degree(v) < bound; ++i) {
            int u = dst[(rot + i) % dst.size()];
            if (u != v && !g.has_arc(v, u)) g.add_arc(v, u);
        }
        ++rot;
    });
}

void assert_semidegree(const Digraph& g, int bound, const char* who) {
    if (min_semidegree(g) < bound)
        throw std::logic_error(std::string(who) + ": semidegree repair failed");
}

int ceil_half(int n) { return (n + 1) / 2; }

}  // namespace

SyntheticInstance synthetic_ST(int n, const ConstantsProfile& p, uint64_t seed) {
    if (n < 40) throw std::invalid_argument("synthetic_ST: n too small");
    Rng rng(seed);
    int a = rng.below(3);
    int b = a + rng.below(2);
    if (a + b > int(p.eps3 * n))
        throw std::invalid_argument("synthetic_ST: unsatisfiable parameters");
    int rest = n - a - b;
    int s = rest / 2, t = rest - s;
    auto bl = blocks(n, {a, b, s, t});
    VertexPartition part{bl[0], bl[1], bl[2], bl[3]};
    const auto &A = part.A, &B = part.B, &S = part.S, &T = part.T;

    Digraph g(n);
    add_all(g, S, S);
    add_all(g, T, T);
    add_all(g, A | B, A | B);
    add_all(g, A, S);   // A sends into S
    add_all(g, T, A);   // A receives from T
    add_all(g, S, B);   // B receives from S
    add_all(g, B, T);   // B sends into T

    const int need = ceil_half(n);
    lift_in(g, S, T, need);
    lift_out(g, T, S, need);
    lift_out(g, S, T, need);
    lift_in(g, T, S, need);
    lift_out(g, A | B, T, need);
    lift_in(g, A | B, T, need);
    assert_semidegree(g, need, "synthetic_ST");

    // noise: extra arcs in directions no clause caps
    std::vector<int> ss = S.to_vector(), ts = T.to_vector();
    for (int i = 0; i < n / 4; ++i) {
        int u = ts[rng.below(t)], v = ss[rng.below(s)];
        if (!g.has_arc(u, v)) g.add_arc(u, v);
    }
    return {g, part};
}

SyntheticInstance synthetic_AB(int n, const ConstantsProfile& p, uint64_t seed) {
    if (n < 60) throw std::invalid_argument("synthetic_AB: n too small");
    Rng rng(seed);
    int cap = int(p.eps3 * n);
    int s_cap = std::max(2, (cap - 1) / 2);
    int s = 2 + rng.below(std::min(4, s_cap - 1));
    int t = s;  // t = s keeps the repair arcs below the nu*n slack
    if (s + t > cap)
        throw std::invalid_argument("synthetic_AB: unsatisfiable parameters");
    int d = 1 + rng.below(2);
    int rest = n - s - t;
    if ((rest - d) % 2) ++d;
    int a = (rest - d) / 2, b = a + d;
    auto bl = blocks(n, {a, b, s, t});
    VertexPartition part{bl[0], bl[1], bl[2], bl[3]};
    const auto &A = part.A, &B = part.B, &S = part.S, &T = part.T;

    Digraph g(n);
    add_all(g, A, B);
    add_all(g, B, A);
    add_all(g, A, S);  // S receives from A
    add_all(g, S, B);  // S sends into B
    add_all(g, B, T);  // T receives from B
    add_all(g, T, A);  // T sends into A

    // B needs in- and out-arcs inside B u T without breaking the Q8 caps:
    // cyclic shifts inside B give every vertex one arc per round.
    const int need = ceil_half(n);
    std::vector<int> bs = B.to_vector();
    int rounds = std::max(0, need - std::min(g.in_degree(bs[0]), g.out_degree(bs[0])));
    rounds = std::min(rounds, n / 40);  // stay clear of the n/20 cap
    for (int r = 1; r <= rounds; ++r)
        for (int i = 0; i < b; ++i) {
            int u = bs[i], v = bs[(i + r) % b];
            if (u != v && !g.has_arc(u, v)) g.add_arc(u, v);
        }
    B.for_each([&](int v) {
        if (g.in_degree(v) < need || g.out_degree(v) < need)
            throw std::logic_error("synthetic_AB: B repair failed");
    });

    // S and T lean on themselves first so that few stray arcs cross into
    // the other small set (strays erode the violating-set slack nu*n)
    lift_in(g, S, S, need);
    lift_in(g, S, T, need);
    {
        // last resort for S's in-degree: B sources, below the Q8 cap
        std::vector<int> bs3 = B.to_vector();
        size_t rot = 1;
        const int q8_cap = n / 20 - 1;
        S.for_each([&](int v) {
            for (size_t i = 0; i < bs3.size() && g.in_degree(v) < need; ++i) {
                if (g.in(v).intersect_count(B) >= q8_cap) break;
                int u = bs3[(rot + i) % bs3.size()];
                if (!g.has_arc(u, v)) g.add_arc(u, v);
            }
            ++rot;
        });
    }
    lift_out(g, S, S, need);
    lift_out(g, S, T, need);
    lift_in(g, T, T, need);
    lift_in(g, T, S, need);
    lift_out(g, T, T, need);
    // T's leftover out-deficit goes into B, bounded by the Q8 cap
    {
        std::vector<int> bs2 = B.to_vector();
        size_t rot = 0;
        const int q8_cap = n / 20 - 1;
        T.for_each([&](int v) {
            for (size_t i = 0; i < bs2.size() && g.out_degree(v) < need; ++i) {
                if (g.out(v).intersect_count(B) >= q8_cap) break;
                int u = bs2[(rot + i) % bs2.size()];
                if (!g.has_arc(v, u)) g.add_arc(v, u);
            }
            ++rot;
        });
    }
    lift_out(g, T, S, need);
    // a<b leaves A one short on both sides; A may lean on S u T freely
    lift_in(g, A, T | S, need);
    lift_out(g, A, S | T, need);
    assert_semidegree(g, need, "synthetic_AB");

    // noise: delete a few A<->B digon arcs; every removal keeps the
    // semidegree floor and the Q3/Q4 slack
    std::vector<int> as = A.to_vector();
    for (int i = 0; i < n / 8; ++i) {
        int u = as[rng.below(a)], v = bs[rng.below(b)];
        bool fwd = rng.below(2);
        int x = fwd ? u : v, y = fwd ? v : u;
        if (g.has_arc(x, y) && g.out_degree(x) > need && g.in_degree(y) > need)
            g.remove_arc(x, y);
    }
    return {g, part};
}

SyntheticInstance synthetic_ABST(int n, const ConstantsProfile& p, uint64_t seed) {
    if (n < 80) throw std::invalid_argument("synthetic_ABST: n too small");
    Rng rng(seed);
    const int lo = threshold_count(p.tau, n);
    int free_room = n - 4 * lo;
    if (free_room < 0)
        throw std::invalid_argument("synthetic_ABST: unsatisfiable parameters");
    int jitter = std::min(free_room, int(p.eps1 * n));
    int d_ab = rng.below(jitter + 1);
    int d_st = rng.below(std::max(1, jitter + 1 - d_ab));
    int left = free_room - d_ab - d_st;
    // distribute: a,b get half the remaining slack, s,t the rest
    int ab_extra = left / 2, st_extra = left - ab_extra;
    int a = lo + ab_extra / 2, b = a + d_ab;
    int s = lo + st_extra / 2, t = s + d_st;
    t += n - (a + b + s + t);  // absorb rounding
    if (t < s) std::swap(s, t);
    while (t - s > jitter) {   // keep |s-t| within the R2 slack
        --t;
        ++s;
    }
    auto bl = blocks(n, {a, b, s, t});
    VertexPartition part{bl[0], bl[1], bl[2], bl[3]};
    const auto &A = part.A, &B = part.B, &S = part.S, &T = part.T;

    Digraph g(n);
    add_all(g, A, B);
    add_all(g, B, A);
    add_all(g, S, S);
    add_all(g, T, T);
    add_all(g, A, S);  // S: in from A u S, out to B u S
    add_all(g, S, B);
    add_all(g, B, T);  // T: in from B u T, out to A u T
    add_all(g, T, A);

    const int need = ceil_half(n);
    lift_in(g, S, T, need);
    lift_out(g, T, S, need);
    lift_out(g, S, T, need);
    lift_in(g, T, S, need);
    lift_out(g, A, S, need);
    lift_in(g, A, T, need);
    lift_out(g, B, T, need);
    lift_in(g, B, S, need);
    assert_semidegree(g, need, "synthetic_ABST");

    // noise in uncapped directions (sources outside A u S)
    std::vector<int> bt = (B | T).to_vector();
    for (int i = 0; i < n / 4; ++i) {
        int u = bt[rng.below(int(bt.size()))];
        int v = rng.below(n);
        if (u != v && !g.has_arc(u, v)) g.add_arc(u, v);
    }
    return {g, part};
}

FFamilyInstance f_family_build(int variant, int m) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("f_family_build: variant must be 1 or 2");
    if (m < 2) throw std::invalid_argument("f_family_build: need m >= 2");
    const int n = 2 * m;
    FFamilyInstance inst;
    inst.m = m;
    inst.variant = variant;
    inst.g = Digraph(n);
    inst.A = VertexSet(n);
    inst.B = VertexSet(n);
    Digraph& g = inst.g;
    auto digon = [&](int x, int y) {
        g.add_arc(x, y);
        g.add_arc(y, x);
    };
    for (int a = 0; a < m - 1; ++a) inst.A.set(a);
    for (int b = m - 1; b < n - 2; ++b) inst.B.set(b);
    const int u = n - 2, w = n - 1;
    if (variant == 1) {
        // one B vertex carries digons to both outer vertices; the outer
        // vertices are otherwise joined by a single arc w -> u
        const int b0 = n - 3;
        for (int a = 0; a < m - 1; ++a) {
            inst.B.for_each([&](int b) { digon(a, b); });
            g.add_arc(u, a);
            g.add_arc(a, w);
        }
        digon(b0, u);
        digon(b0, w);
        for (int b = m - 1; b < b0; ++b) {
            g.add_arc(b, u);
            g.add_arc(w, b);
        }
        g.add_arc(w, u);
    } else {
        for (int a = 0; a < m - 1; ++a) {
            inst.B.for_each([&](int b) { digon(a, b); });
            g.add_arc(u, a);
            g.add_arc(a, w);
        }
        digon(u, w);
        inst.B.for_each([&](int b) {
            g.add_arc(b, u);
            g.add_arc(w, b);
        });
    }
    return inst;
}

std::string f_family_resource_text(const FFamilyInstance& inst) {
    std::ostringstream os;
    os << "# family f" << inst.variant << " m=" << inst.m << "\n";
    os << "# A";
    inst.A.for_each([&](int v) { os << " " << v; });
    os << "\n# B";
    inst.B.for_each([&](int v) { os << " " << v; });
    os << "\n" << inst.g.to_text();
    return os.str();
}

FFamilyInstance f_family(int variant, int m, const std::string& resource_dir) {
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("f_family: variant must be 1 or 2");
    if (m < 2) throw std::invalid_argument("f_family: need m >= 2");
    std::string path = resource_dir + "/f" + std::to_string(variant) + "_m" +
                       std::to_string(m) + ".dg";
    std::ifstream f(path);
    if (!f) throw std::runtime_error("f_family: resource missing: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();

    FFamilyInstance inst;
    inst.m = m;
    inst.variant = variant;
    inst.g = Digraph::from_text(text);
    const int n = inst.g.n();
    if (n != 2 * m) throw std::runtime_error("f_family: resource has wrong order");
    inst.A = VertexSet(n);
    inst.B = VertexSet(n);

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("# A", 0) == 0 || line.rfind("# B", 0) == 0) {
            std::istringstream ls(line.substr(3));
            int v;
            while (ls >> v) (line[2] == 'A' ? inst.A : inst.B).set(v);
        }
    }

    // caption constraints
    if (inst.A.count() != m - 1 || inst.B.count() != m - 1)
        throw std::runtime_error("f_family: A/B sizes inconsistent with caption");
    if (!(inst.A & inst.B).empty())
        throw std::runtime_error("f_family: A and B overlap");
    for (const VertexSet* cls : {&inst.A, &inst.B}) {
        bool indep = true;
        cls->for_each([&](int u) {
            if (inst.g.out(u).intersect_count(*cls) > 0) indep = false;
        });
        if (!indep) throw std::runtime_error("f_family: A/B not independent");
    }
    if (min_semidegree(inst.g) != m)
        throw std::runtime_error("f_family: semidegree differs from caption");
    return inst;
}

namespace {

uint64_t adjacency_code(const Digraph& g, const std::vector<int>& perm) {
    uint64_t code = 0;
    int n = g.n();
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u != v) {
                if (g.has_arc(perm[u], perm[v])) code |= uint64_t{1} << bit;
                ++bit;
            }
        }
    return code;
}

uint64_t canonical_code(const Digraph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = ~uint64_t{0};
    do {
        best = std::min(best, adjacency_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Digraph> search_antidirected_obstructions(int m) {
    const int n = 2 * m;
    if (n > 6)
        throw std::invalid_argument(
            "search_antidirected_obstructions: budget exceeded beyond m=3");
    CyclePattern anti = CyclePattern::alternating(n);

    // per-vertex out-neighbourhood choices with out-degree >= m
    std::vector<std::vector<uint32_t>> choices(n);
    for (int v = 0; v < n; ++v)
        for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask)
            if (!((mask >> v) & 1) && std::popcount(mask) >= m)
                choices[v].push_back(mask);

    std::map<uint64_t, Digraph> found;
    std::vector<uint32_t> picked(n);
    std::vector<int> in_count(n, 0);

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            Digraph g(n);
            for (int u = 0; u < n; ++u)
                for (int w = 0; w < n; ++w)
                    if ((picked[u] >> w) & 1) g.add_arc(u, w);
            if (min_semidegree(g) < m) return;
            OracleOptions opt;
            opt.limit = n;
            opt.threads = 1;
            if (oracle_embed_serial(g, anti, opt)) return;
            uint64_t code = canonical_code(g);
            found.emplace(code, g);
            return;
        }
        for (uint32_t mask : choices[v]) {
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                int inc = in_count[w] + (((mask >> w) & 1) ? 1 : 0);
                // remaining vertices can add at most one in-arc each
                if (inc + (n - 1 - v) < m) ok = false;
            }
            if (!ok) continue;
            for (int w = 0; w < n; ++w)
                if ((mask >> w) & 1) ++in_count[w];
            picked[v] = mask;
            rec(v + 1);
            for (int w = 0; w < n; ++w)
                if ((mask >> w) & 1) --in_count[w];
        }
    };
    rec(0);

    std::vector<Digraph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace ohc
