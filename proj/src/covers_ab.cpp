#include <algorithm>

#include "covers_internal.hpp"
#include "ohc/matching.hpp"

namespace ohc {

namespace {

using detail::Slot;
using detail::WindowPlan;

constexpr Dir F = Dir::Forward;
constexpr Dir B = Dir::Backward;

Result<ExceptionalCover> finish_cover(const Digraph& g, const VertexPartition& part,
                                      const CyclePattern& c, PartialEmbedding pe,
                                      std::string branch) {
    ExceptionalCover cover;
    cover.cover = std::move(pe);
    cover.partition = part;
    cover.class_seq = class_sequence(part, cover.cover.images);
    cover.reps = rep_counts(cover.class_seq);
    cover.branch = std::move(branch);
    std::string why;
    if (!check_exceptional_cover(g, part, c, cover, &why))
        return Result<ExceptionalCover>::fail(cover.branch, why);
    return Result<ExceptionalCover>::success(std::move(cover));
}

Result<PartialEmbedding> execute(const Digraph& g, const CyclePattern& c, int start,
                                 WindowPlan& plan, VertexSet reserved,
                                 const char* stage) {
    std::vector<Slot> slots = plan.take();
    for (const Slot& sl : slots)
        if (sl.fixed) reserved.set(sl.vertex);
    return detail::run_plan(g, c, start, slots, reserved, stage);
}

// extend with one host per side until both ends sit in A
bool fix_ends_in_a(const Digraph& g, const CyclePattern& c,
                   const VertexPartition& part, PartialEmbedding& pe) {
    auto extend = [&](bool front) -> bool {
        VertexSet used = VertexSet::of(g.n(), pe.images);
        int anchor = front ? pe.images.front() : pe.images.back();
        int pos = front ? pe.start_pos - 1 : pe.start_pos + int(pe.images.size()) - 1;
        bool fwd = c.dir(pos) == F;
        VertexSet cand = part.A;
        cand.subtract(used);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            bool ok = front ? (fwd ? g.has_arc(v, anchor) : g.has_arc(anchor, v))
                            : (fwd ? g.has_arc(anchor, v) : g.has_arc(v, anchor));
            if (!ok) continue;
            if (front) {
                pe.images.insert(pe.images.begin(), v);
                pe.start_pos = ((pe.start_pos - 1) % c.n() + c.n()) % c.n();
            } else {
                pe.images.push_back(v);
            }
            return true;
        }
        return false;
    };
    if (int(pe.images.size()) + 2 > g.n()) return false;
    if (!part.A.test(pe.images.front()) && !extend(true)) return false;
    if (!part.A.test(pe.images.back()) && !extend(false)) return false;
    return true;
}

// ---- few sinks: cover groups inside consistent runs -----------------------

struct Group {
    enum Kind { BBpair, BTB, ASB, BTA } kind;
    Arc arc;     // BBpair / BTB
    int v = -1;  // ASB / BTA
};

bool schedule_group(WindowPlan& plan, const Digraph& g, const VertexPartition& part,
                    const Group& grp, int max_offset) {
    while (plan.size() < max_offset) {
        bool a_next = plan.next_is_a();
        switch (grp.kind) {
            case Group::BBpair:
                if (!a_next && plan.word_matches({F})) {
                    plan.lay_fixed(grp.arc.from, false, "BB");
                    plan.lay_fixed(grp.arc.to, true, "BB");
                    return true;
                }
                if (!a_next && plan.word_matches({B})) {
                    plan.lay_fixed(grp.arc.to, false, "BB");
                    plan.lay_fixed(grp.arc.from, true, "BB");
                    return true;
                }
                break;
            case Group::BTB: {
                const int t = grp.arc.from, y = grp.arc.to;
                if (!a_next && plan.word_matches({F, F})) {
                    plan.lay_pool_custom(part.B & g.in(t), false, "B.T");
                    plan.lay_fixed(t, false, "T");
                    plan.lay_fixed(y, true, "TB");
                    return true;
                }
                if (!a_next && plan.word_matches({B, B})) {
                    plan.lay_fixed(y, false, "TB");
                    plan.lay_fixed(t, false, "T");
                    plan.lay_pool_custom(part.B & g.in(t), true, "B.T");
                    return true;
                }
                break;
            }
            case Group::ASB: {
                const int s = grp.v;
                if (a_next && plan.word_matches({F, F})) {
                    plan.lay_pool_custom(part.A & g.in(s), true, "A.S");
                    plan.lay_fixed(s, false, "S");
                    plan.lay_pool_custom(part.B & g.out(s), true, "S.B");
                    return true;
                }
                if (!a_next && plan.word_matches({B, B})) {
                    plan.lay_pool_custom(part.B & g.out(s), true, "S.B");
                    plan.lay_fixed(s, false, "S");
                    plan.lay_pool_custom(part.A & g.in(s), true, "A.S");
                    return true;
                }
                break;
            }
            case Group::BTA: {
                const int t = grp.v;
                if (!a_next && plan.word_matches({F, F})) {
                    plan.lay_pool_custom(part.B & g.in(t), true, "B.T");
                    plan.lay_fixed(t, false, "T");
                    plan.lay_pool_custom(part.A & g.out(t), true, "T.A");
                    return true;
                }
                if (a_next && plan.word_matches({B, B})) {
                    plan.lay_pool_custom(part.A & g.out(t), true, "T.A");
                    plan.lay_fixed(t, false, "T");
                    plan.lay_pool_custom(part.B & g.in(t), true, "B.T");
                    return true;
                }
                break;
            }
        }
        plan.lay_alternation();
    }
    return false;
}

Result<ExceptionalCover> excover_few_sinks(const Digraph& g,
                                           const VertexPartition& part,
                                           const CyclePattern& c,
                                           const ConstantsProfile& p) {
    using R = Result<ExceptionalCover>;
    const int n = g.n();
    const int d = part.b() - part.a();
    const int max_len = std::min(n - 2, std::max(12, int(21 * p.eps4 * n) - 2));

    std::vector<Arc> m_edges;
    if (d > 0) {
        auto bm = balance_matching(g, part, d);
        if (!bm.ok()) return R::fail("excover1", bm.failure.inequality);
        m_edges.assign(bm->begin(), bm->begin() + d);
    }

    std::vector<Group> groups;
    VertexSet t_by_edge(n);
    for (const Arc& e : m_edges)
        if (part.B.test(e.from)) groups.push_back({Group::BBpair, e, -1});
    for (const Arc& e : m_edges)
        if (part.T.test(e.from)) {
            groups.push_back({Group::BTB, e, -1});
            t_by_edge.set(e.from);
        }
    part.S.for_each([&](int s) { groups.push_back({Group::ASB, {}, s}); });
    (part.T - t_by_edge).for_each([&](int t) { groups.push_back({Group::BTA, {}, t}); });

    WindowPlan plan(c, part, 0, true);
    plan.lay_alternation();  // first vertex in A
    for (const Group& grp : groups)
        if (!schedule_group(plan, g, part, grp, max_len))
            return R::fail("excover1",
                           "consistent runs before the 21*eps4*n bound fewer than "
                           "d + s + t");
    if (plan.next_is_a()) plan.lay_alternation();  // close on A

    auto pe = execute(g, c, 0, plan, VertexSet(n), "excover1");
    if (!pe.ok()) return R::fail("excover1", pe.failure.inequality);
    return finish_cover(g, part, c, std::move(*pe), "excover1");
}

// ---- shared many-sinks helpers --------------------------------------------

struct SinkWindow {
    int start = 0;
    int len = 3;
    int sinks = 0;
};
SinkWindow densest_sink_window(const CyclePattern& c, int max_len) {
    const int n = c.n();
    int w = std::min(max_len, n - 2);
    SinkWindow best;
    best.len = w;
    for (int i = 0; i < n; ++i) {
        int m = 0;
        for (int j = 1; j < w; ++j) m += c.is_sink(i + j) ? 1 : 0;
        if (m > best.sinks) {
            best.sinks = m;
            best.start = i;
        }
    }
    if (best.len % 2 == 0) --best.len;
    return best;
}

// Lays each special at the next sink whose neighbours take the wanted
// class, closing the sink with an explicit repeated-class host.
bool lay_specials_at_sinks(WindowPlan& plan, const VertexPartition& part,
                           const CyclePattern& c, int start,
                           const std::vector<int>& specials, bool neighbours_a,
                           int max_offset) {
    size_t next = 0;
    while (next < specials.size()) {
        if (plan.size() + 1 >= max_offset) return false;
        int pos = start + plan.size();
        bool is_sink = c.dir(pos - 1) == F && c.dir(pos) == B;
        bool prev_was_a = !plan.next_is_a();
        if (is_sink && prev_was_a == neighbours_a && plan.size() > 0) {
            plan.lay_fixed(specials[next], false, "special");
            // closing neighbour repeats the class (this is the repeat the
            // ledger counts), alternation parity unchanged
            plan.lay_pool_custom(neighbours_a ? part.A : part.B, false, "close");
            ++next;
            continue;
        }
        plan.lay_alternation();
    }
    return true;
}

// scheduled copy of the length-2 link with a fixed S or T middle
bool lay_middle_link(WindowPlan& plan, const Digraph& g, const VertexPartition& part,
                     int mid, bool mid_in_s, int max_offset) {
    // S middles ride consistent pairs A->s->B, T middles B->t->A
    const VertexSet& before = mid_in_s ? part.A & g.in(mid) : part.B & g.in(mid);
    const VertexSet& after = mid_in_s ? part.B & g.out(mid) : part.A & g.out(mid);
    const bool entry_a = mid_in_s;  // ASB enters at A, BTA at B
    while (plan.size() + 2 < max_offset) {
        if (plan.next_is_a() == entry_a && plan.word_matches({F, F})) {
            plan.lay_pool_custom(before, true, "pre");
            plan.lay_fixed(mid, false, "mid");
            plan.lay_pool_custom(after, true, "post");
            return true;
        }
        if (plan.next_is_a() == !entry_a && plan.word_matches({B, B})) {
            plan.lay_pool_custom(after, true, "post");
            plan.lay_fixed(mid, false, "mid");
            plan.lay_pool_custom(before, true, "pre");
            return true;
        }
        plan.lay_alternation();
    }
    return false;
}

// ---- many sinks, a<b or s<t (the E'/E ledger construction) ----------------

OrientedPath link_host_for_edge(const Digraph& g, const VertexPartition& part,
                                const Arc& e, bool as_ab, const VertexSet& avoid) {
    OrientedPath L;
    auto pick = [&](VertexSet pool) {
        pool.subtract(avoid);
        pool.reset(e.from);
        pool.reset(e.to);
        return pool.first();
    };
    bool sink_middle = true;
    if (part.A.test(e.from) && part.A.test(e.to)) {  // AAB
        L.vertices = {e.from, e.to, pick(part.B & g.in(e.to))};
    } else if (part.B.test(e.from) && part.B.test(e.to)) {  // ABB
        L.vertices = {pick(part.A & g.in(e.to)), e.to, e.from};
    } else if (part.A.test(e.from) && part.T.test(e.to)) {  // ATB
        L.vertices = {e.from, e.to, pick(part.B & g.in(e.to))};
    } else {  // E(T,B): ATB with a source middle
        sink_middle = false;
        L.vertices = {pick(part.A & g.out(e.from)), e.from, e.to};
    }
    if (L.vertices.front() < 0 || L.vertices.back() < 0) return {};
    L.dirs = sink_middle ? std::vector<Dir>{F, B} : std::vector<Dir>{B, F};
    if (part.A.test(L.vertices.front()) != as_ab)
        std::reverse(L.vertices.begin(), L.vertices.end());
    return L;
}

Result<ExceptionalCover> excover_ledger(const Digraph& g, const VertexPartition& part,
                                        const CyclePattern& c,
                                        const ConstantsProfile& p) {
    using R = Result<ExceptionalCover>;
    const int n = g.n();
    const int d = part.b() - part.a();
    const int r = part.s() + part.t();
    const bool n_even = n % 2 == 0;
    const char* stage = "excover2.ledger";

    std::vector<Arc> m_edges;
    if (d > 0) {
        auto bm = balance_matching(g, part, d);
        if (!bm.ok()) return R::fail(stage, bm.failure.inequality);
        m_edges = *bm;
    } else {
        std::vector<std::pair<int, int>> pairs;
        (part.B | part.T).for_each([&](int u) {
            (g.out(u) & part.B).for_each([&](int v) {
                if (u != v) pairs.emplace_back(u, v);
            });
        });
        if (n_even)
            part.A.for_each([&](int u) {
                (g.out(u) & (part.A | part.T)).for_each([&](int v) {
                    if (u != v) pairs.emplace_back(u, v);
                });
            });
        auto mm = matching_of_size(pairs, n_even ? 2 : 1);
        if (mm.empty())
            return R::fail(stage, n_even ? "no matching of size 2 in E(BuT,B) u E(A,AuT)"
                                         : "no edge in E(BuT,B)");
        for (auto [u, v] : mm) m_edges.push_back({u, v});
    }

    std::vector<Arc> eprime(
        m_edges.begin(),
        m_edges.begin() + std::min<size_t>(n_even ? 2 : 1, m_edges.size()));
    if (int(eprime.size()) < (n_even ? 2 : 1))
        return R::fail(stage, "matching too small for E'");

    auto both_in = [&](const Arc& e, const VertexSet& cls) {
        return cls.test(e.from) && cls.test(e.to);
    };
    int pval = 0, covered_t = 0;
    for (const Arc& e : eprime) {
        pval += both_in(e, part.B) ? 1 : 0;
        pval -= both_in(e, part.A) ? 1 : 0;
        covered_t += (part.T.test(e.from) ? 1 : 0) + (part.T.test(e.to) ? 1 : 0);
    }
    const int rprime = r - covered_t;
    const int dprime = (d == 0 && n_even) ? -pval : std::min(rprime, d - pval);
    std::vector<Arc> e_extra;
    {
        int need = (d == 0 && n_even) ? 0 : d - pval - dprime;
        for (const Arc& e : m_edges) {
            if (int(e_extra.size()) >= need) break;
            if (both_in(e, part.B) &&
                std::find(eprime.begin(), eprime.end(), e) == eprime.end())
                e_extra.push_back(e);
        }
        if (int(e_extra.size()) < need)
            return R::fail(stage, "matching holds fewer than d-p-d' B-edges");
    }
    if (((rprime - dprime) % 2 + 2) % 2 != 0)
        return R::fail(stage, "parity d' != r' mod 2 (ledger broken)");
    if (rprime < std::abs(dprime)) return R::fail(stage, "|d'| > r'");

    VertexSet covered(n);
    for (const Arc& e : eprime) {
        covered.set(e.from);
        covered.set(e.to);
    }
    SinkSourceJob job;
    job.SA = VertexSet(n);
    job.SB = VertexSet(n);
    job.TA = VertexSet(n);
    job.TB = VertexSet(n);
    {
        int quota_a = (rprime - dprime) / 2;
        int taken = 0;
        (part.S - covered).for_each([&](int v) {
            if (taken++ < quota_a)
                job.SA.set(v);
            else
                job.SB.set(v);
        });
        (part.T - covered).for_each([&](int v) {
            if (taken++ < quota_a)
                job.TA.set(v);
            else
                job.TB.set(v);
        });
    }

    SinkWindow win = densest_sink_window(c, std::max(20, int(2 * p.eps4 * n) - 8));
    auto trip = useful_tripartition(c, win.start, win.len);
    if (!trip.ok()) return R::fail(stage, trip.failure.inequality);

    const Arc e1 = eprime.front();
    const bool e1_source_middle = part.T.test(e1.from);
    std::vector<Dir> lw =
        e1_source_middle ? std::vector<Dir>{B, F} : std::vector<Dir>{F, B};
    auto lo = find_link(c, *trip, lw);
    if (!lo.ok()) return R::fail(stage, lo.failure.inequality);

    VertexSet avoid = job.SA | job.SB | job.TA | job.TB;
    for (const Arc& e : e_extra) {
        avoid.set(e.from);
        avoid.set(e.to);
    }
    for (const Arc& e : eprime) {
        avoid.set(e.from);
        avoid.set(e.to);
    }
    OrientedPath l_host = link_host_for_edge(g, part, e1, *lo % 2 == 0, avoid);
    if (l_host.vertices.empty()) return R::fail(stage, "no host around the E' link");
    for (int v : l_host.vertices) avoid.set(v);

    job.a1 = (part.A - avoid).first();
    if (job.a1 < 0) return R::fail(stage, "A exhausted");
    job.trip = *trip;
    job.link_host = l_host;
    job.link_offset = *lo;

    auto qg = sink_source_embed(g, c, part, job, avoid - VertexSet::of(n, {e1.from, e1.to}));
    if (!qg.ok()) return R::fail(stage, qg.failure.inequality);
    PartialEmbedding pe = *qg;

    std::vector<Arc> tail_edges = e_extra;
    if (eprime.size() == 2) tail_edges.insert(tail_edges.begin(), eprime[1]);
    if (!tail_edges.empty()) {
        const int tail_start = win.start + win.len + 1;
        const bool prev_a = part.A.test(pe.images.back());
        WindowPlan plan(c, part, tail_start, !prev_a);
        const int guard = std::min(n - win.len - 6, std::max(24, int(p.eps4 * n)));
        for (const Arc& e : tail_edges) {
            bool placed = false;
            if (both_in(e, part.A) || both_in(e, part.B)) {
                bool pair_a = both_in(e, part.A);
                while (plan.size() < guard && !placed) {
                    if (plan.next_is_a() == pair_a) {
                        if (plan.word_matches({F})) {
                            plan.lay_fixed(e.from, false, "pair");
                            plan.lay_fixed(e.to, true, "pair");
                            placed = true;
                            break;
                        }
                        if (plan.word_matches({B})) {
                            plan.lay_fixed(e.to, false, "pair");
                            plan.lay_fixed(e.from, true, "pair");
                            placed = true;
                            break;
                        }
                    }
                    plan.lay_alternation();
                }
            } else if (part.A.test(e.from)) {  // E(A,T): sink middle
                while (plan.size() < guard && !placed) {
                    if (plan.next_is_a() && plan.word_matches({F, B})) {
                        plan.lay_fixed(e.from, true, "AT");
                        plan.lay_fixed(e.to, false, "T");
                        plan.lay_pool_custom(part.B & g.in(e.to), true, "B.T");
                        placed = true;
                        break;
                    }
                    if (!plan.next_is_a() && plan.word_matches({B, F})) {
                        plan.lay_pool_custom(part.B & g.in(e.to), true, "B.T");
                        plan.lay_fixed(e.to, false, "T");
                        plan.lay_fixed(e.from, true, "AT");
                        placed = true;
                        break;
                    }
                    plan.lay_alternation();
                }
            } else {  // E(T,B): source middle
                while (plan.size() < guard && !placed) {
                    if (plan.next_is_a() && plan.word_matches({B, F})) {
                        plan.lay_pool_custom(part.A & g.out(e.from), true, "T.A");
                        plan.lay_fixed(e.from, false, "T");
                        plan.lay_fixed(e.to, true, "TB");
                        placed = true;
                        break;
                    }
                    if (!plan.next_is_a() && plan.word_matches({F, B})) {
                        plan.lay_fixed(e.to, true, "TB");
                        plan.lay_fixed(e.from, false, "T");
                        plan.lay_pool_custom(part.A & g.out(e.from), true, "T.A");
                        placed = true;
                        break;
                    }
                    plan.lay_alternation();
                }
            }
            if (!placed)
                return R::fail(stage, "no oriented slot for an E'/E edge in the tail");
        }
        VertexSet reserved_tail = VertexSet::of(n, pe.images);
        auto tail_pe = execute(g, c, tail_start, plan, reserved_tail, stage);
        if (!tail_pe.ok()) return R::fail(stage, tail_pe.failure.inequality);
        int u = pe.images.back(), v = tail_pe->images.front();
        bool fwd = c.dir(tail_start - 1) == F;
        if (!(fwd ? g.has_arc(u, v) : g.has_arc(v, u)))
            return R::fail(stage, "splice edge between the window and the tail missing");
        pe.images.insert(pe.images.end(), tail_pe->images.begin(),
                         tail_pe->images.end());
    }
    if (!fix_ends_in_a(g, c, part, pe)) return R::fail(stage, "cannot end the cover in A");
    return finish_cover(g, part, c, std::move(pe), stage);
}

// ---- many sinks, a=b and s=t ----------------------------------------------

struct AntiRun {
    int pair_pos = -1;  // dirs[pair_pos] == dirs[pair_pos+1]
    int len = 0;        // antidirected stretch length from pair_pos+1
};
AntiRun longest_anti_after_pair(const CyclePattern& c) {
    const int n = c.n();
    AntiRun best;
    for (int j = 0; j < n; ++j) {
        if (c.dir(j) != c.dir(j + 1)) continue;
        int len = 0;
        while (len < n - 3 && c.dir(j + 1 + len) != c.dir(j + 2 + len)) ++len;
        if (len > best.len) {
            best.len = len;
            best.pair_pos = j;
        }
    }
    return best;
}

Result<ExceptionalCover> excover_close_anti(const Digraph& g,
                                            const VertexPartition& part,
                                            const CyclePattern& c,
                                            const ConstantsProfile& p) {
    using R = Result<ExceptionalCover>;
    const int n = g.n();
    const char* stage = "excover2.close";
    (void)p;
    AntiRun run = longest_anti_after_pair(c);
    if (run.pair_pos < 0) return R::fail(stage, "no consistent pair exists");

    struct Found {
        Arc e;
        int kind;  // 0=E(T,B) 1=E(B,S) 2=E(S,A) 3=E(A,T)
    };
    std::optional<Found> found;
    auto scan = [&](const VertexSet& from, const VertexSet& to, int kind) {
        if (found) return;
        for (int u = from.first(); u >= 0 && !found; u = from.next(u)) {
            int v = (g.out(u) & to).first();
            if (v >= 0) found = Found{{u, v}, kind};
        }
    };
    scan(part.T, part.B, 0);
    scan(part.B, part.S, 1);
    scan(part.S, part.A, 2);
    scan(part.A, part.T, 3);

    if (found) {
        const Arc e = found->e;
        const bool edge_at_s = found->kind == 1 || found->kind == 2;
        int s1 = found->kind == 1 ? e.to : (found->kind == 2 ? e.from : -1);
        int t1 = found->kind == 0 ? e.from : (found->kind == 3 ? e.to : -1);
        if (edge_at_s) {
            VertexSet tt = part.T;
            t1 = tt.first();
        } else {
            VertexSet ss = part.S;
            s1 = ss.first();
        }
        if (s1 < 0 || t1 < 0) return R::fail(stage, "S or T empty");

        const int start = run.pair_pos;
        const bool pair_forward = c.dir(start) == F;

        // prefix covering the special away from the edge, ending in A
        WindowPlan plan(c, part, start,
                        /*start_in_a=*/edge_at_s ? !pair_forward : pair_forward);
        if (edge_at_s) {
            if (pair_forward) {  // B t1 A on F,F
                plan.lay_pool_custom(part.B & g.in(t1), true, "B.T");
                plan.lay_fixed(t1, false, "T");
                plan.lay_pool_custom(part.A & g.out(t1), true, "T.A");
            } else {  // A t1 B A on B,B,F
                plan.lay_pool_custom(part.A & g.out(t1), true, "T.A");
                plan.lay_fixed(t1, false, "T");
                plan.lay_pool_custom(part.B & g.in(t1), true, "B.T");
                plan.lay_pool_custom(part.A, true, "A");
            }
        } else {
            if (pair_forward) {  // A s1 B A on F,F,B
                plan.lay_pool_custom(part.A & g.in(s1), true, "A.S");
                plan.lay_fixed(s1, false, "S");
                plan.lay_pool_custom(part.B & g.out(s1), true, "S.B");
                plan.lay_pool_custom(part.A, true, "A");
            } else {  // B s1 A on B,B
                plan.lay_pool_custom(part.B & g.out(s1), true, "S.B");
                plan.lay_fixed(s1, false, "S");
                plan.lay_pool_custom(part.A & g.in(s1), true, "A.S");
            }
        }
        const int prefix_len = plan.size();

        const int pstart = start + prefix_len - 1;  // sinksource reuses the A end
        const int plen =
            std::min(run.len - (prefix_len - 2), n - prefix_len - 4);
        if (plen < 8) return R::fail(stage, "antidirected stretch too short");
        auto trip = useful_tripartition(c, pstart, plen);
        if (!trip.ok()) return R::fail(stage, trip.failure.inequality);

        SinkSourceJob job;
        job.SA = part.S;
        job.SA.reset(s1);
        job.TB = part.T;
        job.TB.reset(t1);
        job.SB = VertexSet(n);
        job.TA = VertexSet(n);
        if (edge_at_s) job.SA.reset(e.from), job.SA.reset(e.to);
        if (!edge_at_s) job.TB.reset(e.from), job.TB.reset(e.to);
        job.trip = *trip;

        const bool sink_middle = found->kind == 1 || found->kind == 3;
        std::vector<Dir> lw =
            sink_middle ? std::vector<Dir>{F, B} : std::vector<Dir>{B, F};
        auto lo = find_link(c, *trip, lw);
        if (!lo.ok()) return R::fail(stage, lo.failure.inequality);

        VertexSet avoid = job.SA | job.SB | job.TA | job.TB;
        avoid.set(s1);
        avoid.set(t1);
        OrientedPath link;
        switch (found->kind) {
            case 0:  // t1->b1: B T A, source middle
                link.vertices = {e.to, e.from,
                                 ((part.A & g.out(e.from)) - avoid).first()};
                link.dirs = {B, F};
                break;
            case 1:  // b1->s1: A S B, sink middle
                link.vertices = {((part.A & g.in(e.to)) - avoid).first(), e.to,
                                 e.from};
                link.dirs = {F, B};
                break;
            case 2:  // s1->a1: A S B, source middle
                link.vertices = {e.to, e.from,
                                 ((part.B & g.out(e.from)) - avoid).first()};
                link.dirs = {B, F};
                break;
            default:  // a1->t1: A T B, sink middle
                link.vertices = {e.from, e.to,
                                 ((part.B & g.in(e.to)) - avoid).first()};
                link.dirs = {F, B};
        }
        if (link.vertices.front() < 0 || link.vertices.back() < 0)
            return R::fail(stage, "no pool host around the mixed edge link");
        if (part.A.test(link.vertices.front()) != (*lo % 2 == 0))
            std::reverse(link.vertices.begin(), link.vertices.end());
        job.link_host = link;
        job.link_offset = *lo;

        VertexSet reserved(n);
        reserved.set(s1);
        reserved.set(t1);
        for (int v : link.vertices) reserved.set(v);
        auto prefix_pe = execute(g, c, start, plan, reserved, stage);
        if (!prefix_pe.ok()) return R::fail(stage, prefix_pe.failure.inequality);
        job.a1 = prefix_pe->images.back();
        if (!part.A.test(job.a1)) return R::fail(stage, "prefix does not end in A");

        VertexSet res2 = VertexSet::of(n, prefix_pe->images);
        res2.reset(job.a1);
        auto body = sink_source_embed(g, c, part, job, res2);
        if (!body.ok()) return R::fail(stage, body.failure.inequality);
        PartialEmbedding pe = *prefix_pe;
        pe.images.pop_back();
        pe.images.insert(pe.images.end(), body->images.begin(), body->images.end());
        if (!fix_ends_in_a(g, c, part, pe))
            return R::fail(stage, "cannot end the cover in A");
        return finish_cover(g, part, c, std::move(pe), stage);
    }

    // mixed families empty
    const int s = part.s();
    if (s == 1) {
        int s1 = part.S.first(), t1 = part.T.first();
        if (!g.has_arc(s1, t1)) return R::fail(stage, "edge s1->t1 forced but absent");
        for (int j = 0; j < n; ++j) {
            if (c.dir(j) == F && c.dir(j + 1) == F && c.dir(j + 2) == B) {
                std::vector<Slot> slots = {detail::pool_slot(part.A & g.in(s1), "A.S"),
                                           detail::fixed_slot(s1, "S"),
                                           detail::fixed_slot(t1, "T"),
                                           detail::pool_slot(part.B & g.in(t1), "B.T"),
                                           detail::pool_slot(part.A, "A")};
                VertexSet res(n);
                res.set(s1);
                res.set(t1);
                auto pe = detail::run_plan(g, c, j, slots, res, stage);
                if (pe.ok()) return finish_cover(g, part, c, std::move(*pe), stage);
            }
            if (c.dir(j) == F && c.dir(j + 1) == B && c.dir(j + 2) == B) {
                std::vector<Slot> slots = {detail::pool_slot(part.A, "A"),
                                           detail::pool_slot(part.B & g.in(t1), "B.T"),
                                           detail::fixed_slot(t1, "T"),
                                           detail::fixed_slot(s1, "S"),
                                           detail::pool_slot(part.A & g.in(s1), "A.S")};
                VertexSet res(n);
                res.set(s1);
                res.set(t1);
                auto pe = detail::run_plan(g, c, j, slots, res, stage);
                if (pe.ok()) return finish_cover(g, part, c, std::move(*pe), stage);
            }
        }
        return R::fail(stage, "no FFB / FBB word for the ASTBA form");
    }

    // s = t >= 2: opposite crossing edges around the antidirected form
    auto pair = two_disjoint_st_edges(g, part, STEdgeVariant::I, STEdgeDir::TS,
                                      STEdgeDir::ST);
    if (!pair.ok()) return R::fail(stage, pair.failure.inequality);
    const Arc e1 = pair->first, e2 = pair->second;  // e1: T->S, e2: S->T

    int w0 = -1;
    const int need = 2 * (part.s() + part.t()) + 14;
    for (int j = 0; j < n && w0 < 0; ++j) {
        if (c.dir(j) != B || c.dir(j + 1) != F) continue;
        int len = 1;
        while (len < n - 3 && c.dir(j + len) != c.dir(j + len + 1)) ++len;
        if (len + 1 >= need) w0 = j;
    }
    if (w0 < 0) return R::fail(stage, "antidirected window shorter than 2(s+t)+14");
    const int guard = need;

    WindowPlan plan(c, part, w0, true);
    // A t1 s1 A over dirs B,F,B (t1 source, s1 sink), then a repeated A
    plan.lay_pool_custom(part.A & g.out(e1.from), true, "T.A");
    plan.lay_fixed(e1.from, false, "T");
    plan.lay_fixed(e1.to, false, "S");
    plan.lay_pool_custom(part.A & g.in(e1.to), false, "A.S");
    std::vector<int> sa = (part.S - VertexSet::of(n, {e1.to, e2.from})).to_vector();
    std::vector<int> tb = (part.T - VertexSet::of(n, {e1.from, e2.to})).to_vector();
    if (!lay_specials_at_sinks(plan, part, c, w0, sa, true, guard))
        return R::fail(stage, "antidirected window exhausted before S was covered");
    // B*B s2 t2 B: the s2 t2 pair rides a source/sink pair
    bool laid = false;
    while (plan.size() + 3 < guard && !laid) {
        if (!plan.next_is_a() && plan.word_matches({B, F, B})) {
            plan.lay_pool_custom(part.B, true, "B");
            plan.lay_fixed(e2.from, false, "S");
            plan.lay_fixed(e2.to, false, "T");
            plan.lay_pool_custom(part.B & g.in(e2.to), false, "B.T");
            laid = true;
            break;
        }
        plan.lay_alternation();
    }
    if (!laid) return R::fail(stage, "no B,F,B site for the s2 t2 middle");
    if (!lay_specials_at_sinks(plan, part, c, w0, tb, false, guard + 2 * part.t()))
        return R::fail(stage, "antidirected window exhausted before T was covered");
    if (plan.next_is_a()) plan.lay_alternation();

    VertexSet reserved = VertexSet::of(
        n, {e1.from, e1.to, e2.from, e2.to});
    for (int v : sa) reserved.set(v);
    for (int v : tb) reserved.set(v);
    auto pe = execute(g, c, w0, plan, reserved, stage);
    if (!pe.ok()) return R::fail(stage, pe.failure.inequality);
    if (!fix_ends_in_a(g, c, part, *pe)) return R::fail(stage, "cannot end the cover in A");
    return finish_cover(g, part, c, std::move(*pe), stage);
}

Result<ExceptionalCover> excover_far_anti(const Digraph& g, const VertexPartition& part,
                                          const CyclePattern& c,
                                          const ConstantsProfile& p) {
    using R = Result<ExceptionalCover>;
    const int n = g.n();
    const char* stage = "excover2.far";
    const int s1 = part.S.first(), t1 = part.T.first();
    if (s1 < 0 || t1 < 0) return R::fail(stage, "S or T empty");

    SinkWindow win = densest_sink_window(c, std::max(20, int(2 * p.eps4 * n) - 6));
    const int start = win.start;
    const int limit = win.len;

    std::vector<int> sa = (part.S - VertexSet::of(n, {s1})).to_vector();
    std::vector<int> tb = (part.T - VertexSet::of(n, {t1})).to_vector();

    // which parity the window's first usable sink has decides whether the
    // S side or the T side is covered first
    bool s_first = true;
    for (int o = 2; o < limit; ++o) {
        int pos = start + o;
        if (c.dir(pos - 1) == F && c.dir(pos) == B) {
            s_first = (o % 2) == 0;  // even offset = A-class neighbours
            break;
        }
    }

    WindowPlan plan(c, part, start, true);
    plan.lay_alternation();
    const auto& first_set = s_first ? sa : tb;
    const auto& second_set = s_first ? tb : sa;
    const int first_mid = s_first ? s1 : t1;
    const int second_mid = s_first ? t1 : s1;

    if (!lay_specials_at_sinks(plan, part, c, start, first_set, s_first, limit))
        return R::fail(stage, s_first ? "window sinks with A-parity fewer than s-1"
                                      : "window sinks with B-parity fewer than t-1");
    if (!lay_middle_link(plan, g, part, first_mid, s_first, limit))
        return R::fail(stage, "no consistent pair for the first link");
    if (!lay_specials_at_sinks(plan, part, c, start, second_set, !s_first, limit))
        return R::fail(stage, s_first ? "window sinks with B-parity fewer than t-1"
                                      : "window sinks with A-parity fewer than s-1");
    if (!lay_middle_link(plan, g, part, second_mid, !s_first, limit + 4))
        return R::fail(stage, "no consistent pair for the second link");
    if (plan.next_is_a()) plan.lay_alternation();

    VertexSet reserved = VertexSet::of(n, {s1, t1});
    for (int v : sa) reserved.set(v);
    for (int v : tb) reserved.set(v);
    auto pe = execute(g, c, start, plan, reserved, stage);
    if (!pe.ok()) return R::fail(stage, pe.failure.inequality);
    if (!fix_ends_in_a(g, c, part, *pe)) return R::fail(stage, "cannot end the cover in A");
    return finish_cover(g, part, c, std::move(*pe), stage);
}

}  // namespace

Result<ExceptionalCover> exceptional_cover_AB(const Digraph& g,
                                              const VertexPartition& part,
                                              const CyclePattern& c,
                                              const ConstantsProfile& p) {
    using R = Result<ExceptionalCover>;
    if (c.n() != g.n()) throw std::invalid_argument("excover_AB: dimension mismatch");
    if (c.antidirected())
        return R::fail("excover_AB", "antidirected patterns are excluded");
    const int n = g.n();

    if (c.sink_count() < p.eps4 * n) return excover_few_sinks(g, part, c, p);

    if (part.b() > part.a() || part.s() < part.t()) return excover_ledger(g, part, c, p);

    // a = b and s = t
    if (part.s() == 0) {
        PartialEmbedding pe;
        pe.start_pos = 0;
        pe.images = {part.A.first()};
        if (pe.images[0] < 0) return R::fail("excover2", "A empty");
        return finish_cover(g, part, c, std::move(pe), "excover2.trivial");
    }

    AntiRun run = longest_anti_after_pair(c);
    const bool close = run.len >= std::min(int(500 * p.eps3 * n), n - 4);
    if (close) {
        auto r1 = excover_close_anti(g, part, c, p);
        if (r1.ok()) return r1;
        auto r2 = excover_far_anti(g, part, c, p);
        return r2.ok() ? r2 : r1;
    }
    auto r1 = excover_far_anti(g, part, c, p);
    if (r1.ok()) return r1;
    auto r2 = excover_close_anti(g, part, c, p);
    return r2.ok() ? r2 : r1;
}

}  // namespace ohc
