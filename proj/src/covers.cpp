#include "ohc/covers.hpp"

#include <algorithm>
#include <sstream>

#include "covers_internal.hpp"
#include "json.hpp"
#include "ohc/matching.hpp"

namespace ohc {

RepCounts rep_counts(const std::string& class_seq) {
    RepCounts rc;
    char prev = 0;
    for (char ch : class_seq) {
        if (ch != 'A' && ch != 'B') continue;
        if (ch == prev) (ch == 'A' ? rc.rep_a : rc.rep_b)++;
        prev = ch;
    }
    return rc;
}

std::string class_sequence(const VertexPartition& part, const std::vector<int>& vertices) {
    std::string s;
    s.reserve(vertices.size());
    for (int v : vertices) s += part.class_letter(v);
    return s;
}

namespace detail {

Slot fixed_slot(int v, const char* label) {
    Slot s;
    s.fixed = true;
    s.vertex = v;
    s.label = label;
    return s;
}

Slot pool_slot(const VertexSet& pool, const char* label) {
    Slot s;
    s.pool = pool;
    s.label = label;
    return s;
}

Result<PartialEmbedding> run_plan(const Digraph& g, const CyclePattern& c,
                                  int start, const std::vector<Slot>& slots,
                                  const VertexSet& reserved, const char* stage) {
    // `reserved` blocks pool picks only; fixed slots may name reserved
    // vertices (they are reserved precisely because a plan names them).
    using R = Result<PartialEmbedding>;
    VertexSet used(g.n());
    std::vector<int> images;
    images.reserve(slots.size());

    auto edge_ok = [&](int from_off, int u, int v) {
        // edge between offsets from_off and from_off+1 hosted by u,v
        return c.dir(start + from_off) == Dir::Forward ? g.has_arc(u, v)
                                                       : g.has_arc(v, u);
    };

    for (int o = 0; o < int(slots.size()); ++o) {
        const Slot& sl = slots[o];
        int chosen = -1;
        if (sl.fixed) {
            if (sl.vertex < 0 || used.test(sl.vertex))
                return R::fail(stage, std::string("fixed host unavailable at offset ") +
                                          std::to_string(o) + " (" + sl.label + ")");
            if (o > 0 && !edge_ok(o - 1, images[o - 1], sl.vertex))
                return R::fail(stage, std::string("missing edge into fixed host at offset ") +
                                          std::to_string(o) + " (" + sl.label + ")");
            chosen = sl.vertex;
        } else {
            VertexSet cand = sl.pool;
            cand.subtract(used);
            cand.subtract(reserved);
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                if (o > 0 && !edge_ok(o - 1, images[o - 1], v)) continue;
                // lookahead: a fixed successor must stay reachable
                if (o + 1 < int(slots.size()) && slots[o + 1].fixed) {
                    int w = slots[o + 1].vertex;
                    bool fwd = c.dir(start + o) == Dir::Forward;
                    if (!(fwd ? g.has_arc(v, w) : g.has_arc(w, v))) continue;
                } else if (o + 1 < int(slots.size())) {
                    VertexSet next = slots[o + 1].pool;
                    next.subtract(used);
                    next.subtract(reserved);
                    next.reset(v);
                    VertexSet reach = c.dir(start + o) == Dir::Forward ? g.out(v) : g.in(v);
                    if ((next & reach).empty()) continue;
                }
                chosen = v;
                break;
            }
            if (chosen < 0)
                return R::fail(stage, std::string("no feasible host at offset ") +
                                          std::to_string(o) + " (" + sl.label + ")");
        }
        used.set(chosen);
        images.push_back(chosen);
    }
    PartialEmbedding pe;
    pe.start_pos = ((start % c.n()) + c.n()) % c.n();
    pe.images = std::move(images);
    return R::success(std::move(pe));
}

}  // namespace detail

namespace {

std::vector<Arc> family_arcs(const Digraph& g, const VertexSet& from,
                             const VertexSet& to) {
    std::vector<Arc> out;
    from.for_each([&](int u) {
        VertexSet t = g.out(u) & to;
        t.for_each([&](int v) { out.push_back({u, v}); });
    });
    return out;
}

bool disjoint(const Arc& a, const Arc& b) {
    return a.from != b.from && a.from != b.to && a.to != b.from && a.to != b.to;
}

std::optional<std::pair<Arc, Arc>> disjoint_pair(const std::vector<Arc>& c1,
                                                 const std::vector<Arc>& c2) {
    for (const Arc& e1 : c1)
        for (const Arc& e2 : c2)
            if (disjoint(e1, e2)) return std::make_pair(e1, e2);
    return std::nullopt;
}

}  // namespace

Result<std::pair<Arc, Arc>> two_disjoint_st_edges(const Digraph& g,
                                                  const VertexPartition& part,
                                                  STEdgeVariant variant,
                                                  STEdgeDir want1, STEdgeDir want2) {
    using R = Result<std::pair<Arc, Arc>>;
    const auto &A = part.A, &B = part.B, &S = part.S, &T = part.T;
    std::vector<Arc> st = family_arcs(g, S, T), ts = family_arcs(g, T, S);
    switch (variant) {
        case STEdgeVariant::I: {
            const auto& c1 = want1 == STEdgeDir::ST ? st : ts;
            const auto& c2 = want2 == STEdgeDir::ST ? st : ts;
            if (auto p = disjoint_pair(c1, c2)) return R::success(*p);
            return R::fail("2edges(i)", "no two disjoint S/T edges in the wanted directions");
        }
        case STEdgeVariant::II:
        case STEdgeVariant::III: {
            if (auto p = disjoint_pair(ts, ts))
                if (disjoint(p->first, p->second)) return R::success(*p);
            return R::fail(variant == STEdgeVariant::II ? "2edges(ii)" : "2edges(iii)",
                           "no two disjoint TS-edges");
        }
        case STEdgeVariant::IV: {
            std::vector<Arc> fam = family_arcs(g, S, T | A);
            std::vector<Arc> fam2 = family_arcs(g, T, S | B);
            fam.insert(fam.end(), fam2.begin(), fam2.end());
            if (auto p = disjoint_pair(fam, fam)) return R::success(*p);
            return R::fail("2edges(iv)", "no two disjoint edges in E(S,TuA) u E(T,SuB)");
        }
    }
    return R::fail("2edges", "unknown variant");
}

Result<std::vector<Arc>> d_plus_one_matching(const Digraph& g,
                                             const VertexPartition& part, int d) {
    using R = Result<std::vector<Arc>>;
    const auto &B = part.B, &S = part.S, &T = part.T;
    if (d < 0) return R::fail("dedges", "d >= 0");
    if (!(part.t() >= part.s() && part.s() >= d + 2))
        return R::fail("dedges", "t >= s >= d+2");
    if (part.b() != part.a() + d) return R::fail("dedges", "b = a+d");

    // auxiliary bipartite graph: left = S u B (arc targets),
    // right = T u B (arc sources); edge iff the arc is allowed
    std::vector<int> left = (S | B).to_vector(), right = (T | B).to_vector();
    std::vector<int> lidx(g.n(), -1), ridx(g.n(), -1);
    for (int i = 0; i < int(left.size()); ++i) lidx[left[i]] = i;
    for (int i = 0; i < int(right.size()); ++i) ridx[right[i]] = i;
    std::vector<std::vector<int>> adj(left.size());
    for (int y : right) {
        VertexSet targets(g.n());
        if (T.test(y))
            targets = g.out(y) & (S | B);
        else
            targets = g.out(y) & S;
        targets.for_each([&](int x) { adj[lidx[x]].push_back(ridx[y]); });
    }
    std::vector<int> match_l = max_bipartite_matching(int(left.size()),
                                                      int(right.size()), adj);
    std::vector<Arc> m0;
    for (int l = 0; l < int(left.size()); ++l)
        if (match_l[l] >= 0) m0.push_back({right[match_l[l]], left[l]});
    if (int(m0.size()) < d + 2)
        return R::fail("dedges", "Konig matching below d+2 (hypothesis violated)");
    std::sort(m0.begin(), m0.end(), [](const Arc& x, const Arc& y) {
        return std::tie(x.from, x.to) < std::tie(y.from, y.to);
    });

    auto is_ts = [&](const Arc& e) { return T.test(e.from) && S.test(e.to); };
    std::vector<Arc> ts_all = family_arcs(g, T, S);
    bool need_ts = !ts_all.empty();
    bool have_ts = std::any_of(m0.begin(), m0.end(), is_ts);

    std::vector<Arc> out;
    if (need_ts && !have_ts) {
        Arc e = ts_all.front();
        out.push_back(e);
        for (const Arc& f : m0)
            if (int(out.size()) < d + 1 && disjoint(e, f)) out.push_back(f);
    } else {
        // keep TS-edges first so one survives the truncation
        for (const Arc& f : m0)
            if (int(out.size()) < d + 1 && is_ts(f)) out.push_back(f);
        for (const Arc& f : m0)
            if (int(out.size()) < d + 1 &&
                std::find(out.begin(), out.end(), f) == out.end())
                out.push_back(f);
    }
    if (int(out.size()) != d + 1)
        return R::fail("dedges", "could not keep d+1 edges after the TS swap");
    return R::success(std::move(out));
}

Result<std::vector<Arc>> balance_matching(const Digraph& g,
                                          const VertexPartition& part, int d) {
    using R = Result<std::vector<Arc>>;
    if (d <= 0) return R::fail("balance", "d > 0");
    if (part.b() != part.a() + d) return R::fail("balance", "b = a+d");
    std::vector<Arc> arcs = family_arcs(g, part.B | part.T, part.B);
    std::vector<std::pair<int, int>> pairs;
    for (const Arc& a : arcs) pairs.emplace_back(a.from, a.to);
    auto picked = matching_of_size(pairs, d + 2);
    if (int(picked.size()) < d + 2)
        return R::fail("balance", "no matching of size d+2 in E(BuT,B)");
    std::vector<Arc> out;
    for (auto [u, v] : picked) out.push_back({u, v});
    return R::success(std::move(out));
}

namespace {

// run_table[i] true iff the length-`len` subpath starting at i is
// consistently oriented in the given direction
std::vector<char> run_table(const CyclePattern& c, int len, Dir d) {
    const int n = c.n();
    std::vector<char> ok(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < len; ++j)
            if (c.dir(i + j) != d) {
                ok[i] = 0;
                break;
            }
    return ok;
}

std::string densest_sink_window(const CyclePattern& c) {
    const int n = c.n();
    int w = std::max(1, n / 8), best = -1, at = 0;
    for (int i = 0; i < n; ++i) {
        int m = 0;
        for (int j = 0; j < w; ++j) m += c.is_sink(i + j) ? 1 : 0;
        if (m > best) {
            best = m;
            at = i;
        }
    }
    std::ostringstream os;
    os << "densest sink window [" << at << "," << at + w << ") holds " << best
       << " sinks";
    return os.str();
}

}  // namespace

Result<LongRunPair> find_long_runs(const CyclePattern& c, int k, int run_len) {
    using R = Result<LongRunPair>;
    const int n = c.n();
    if (!(n / 4 <= k && k <= 3 * n / 4))
        throw std::invalid_argument("find_long_runs: k outside [n/4, 3n/4]");
    std::vector<char> fw = run_table(c, run_len, Dir::Forward);
    std::vector<char> bw = run_table(c, run_len, Dir::Backward);
    // prefer a forward P1 in the given enumeration, falling back to the
    // reverse-traversal normalization (a backward P1)
    for (int pass = 0; pass < 2; ++pass) {
        const std::vector<char>& first = pass == 0 ? fw : bw;
        for (int p1 = 0; p1 < n; ++p1) {
            if (!first[p1]) continue;
            int p2 = (p1 + k) % n;
            if (fw[p2] || bw[p2]) {
                LongRunPair lr;
                lr.p1 = p1;
                lr.p2 = p2;
                lr.p1_forward = pass == 0;
                lr.p2_forward = fw[p2];
                return R::success(lr);
            }
        }
    }
    return R::fail("goodpaths(i)",
                   "no long-run pair at distance " + std::to_string(k) + "; " +
                       densest_sink_window(c));
}

Result<FourRuns> find_four_runs(const CyclePattern& c, int run_len) {
    using R = Result<FourRuns>;
    const int n = c.n();
    const int q = n / 4;
    std::vector<char> fw = run_table(c, run_len, Dir::Forward);
    std::vector<char> bw = run_table(c, run_len, Dir::Backward);
    for (int p = 0; p < n; ++p) {
        bool all = true;
        FourRuns fr;
        for (int j = 0; j < 4; ++j) {
            int pos = (p + j * q) % n;
            if (!fw[pos] && !bw[pos]) {
                all = false;
                break;
            }
            fr.pos[j] = pos;
            fr.forward[j] = fw[pos];
        }
        if (all) return R::success(fr);
    }
    return R::fail("goodpaths(ii)",
                   "no spaced long-run quadruple; " + densest_sink_window(c));
}

Result<UsefulTripartition> useful_tripartition(const CyclePattern& c, int start,
                                               int len) {
    using R = Result<UsefulTripartition>;
    if (len < 4 || len >= c.n())
        throw std::invalid_argument("useful_tripartition: bad subpath length");
    std::vector<int> sinks, sources;
    for (int o = 1; o < len; ++o) {
        if (c.is_sink(start + o)) sinks.push_back(o);
        if (c.is_source(start + o)) sources.push_back(o);
    }
    const int m = int(sinks.size());
    if (m < 12)
        return R::fail("tripartition",
                       "subpath has " + std::to_string(m) + " sinks, needs >= 12");
    const int quota = m / 12;

    auto parity_filter = [](const std::vector<int>& v, int parity) {
        std::vector<int> out;
        for (int x : v)
            if (x % 2 == parity) out.push_back(x);
        return out;
    };
    // the q-sets take every qualifying position; two split indices into
    // the parity-sink list leave the middle third to the sources
    Result<UsefulTripartition> best = R::fail(
        "tripartition", "no parity split reaches the m/12 quota");
    int best_score = -1;
    for (int sink_par = 0; sink_par < 2; ++sink_par) {
        std::vector<int> sk = parity_filter(sinks, sink_par);
        const int ns = int(sk.size());
        if (ns < 2 * quota) continue;
        for (int k1 = quota; k1 + quota <= ns; ++k1) {
            int o1 = sk[k1 - 1] + 1;
            if (o1 % 2) ++o1;
            for (int k2 = std::max(k1, ns - std::max(quota, ns / 3)); k2 + quota <= ns;
                 ++k2) {
                int q3_first = sk[k2];
                if (o1 + 2 >= q3_first) continue;
                for (int src_par = 0; src_par < 2; ++src_par) {
                    std::vector<int> q2;
                    for (int x : sources)
                        if (x % 2 == src_par && x > o1 && x < q3_first - 1)
                            q2.push_back(x);
                    if (int(q2.size()) < quota) continue;
                    int o2 = q2.back() + 1;
                    if (o2 % 2) ++o2;
                    if (o2 >= q3_first || o2 >= len) continue;
                    UsefulTripartition t;
                    t.start = start;
                    t.len = len;
                    t.o1 = o1;
                    t.o2 = o2;
                    t.q1.assign(sk.begin(), sk.begin() + k1);
                    t.q2 = q2;
                    for (int x : sk)
                        if (x > o2) t.q3.push_back(x);
                    if (int(t.q3.size()) < quota) continue;
                    int score = std::min(
                        {int(t.q1.size()), int(t.q2.size()), int(t.q3.size())});
                    if (score > best_score) {
                        best_score = score;
                        best = R::success(t);
                    }
                }
            }
        }
    }
    return best;
}

Result<int> find_link(const CyclePattern& c, const UsefulTripartition& trip,
                      const std::vector<Dir>& wanted) {
    using R = Result<int>;
    const int L = int(wanted.size());
    if (L % 2) throw std::invalid_argument("find_link: link length must be even");
    const int lo_mass = std::max(1, int(trip.q2.size()) / 3);
    for (int q = trip.o1; q + L <= trip.o2; ++q) {
        bool match = true;
        for (int j = 0; j < L && match; ++j)
            if (c.dir(trip.start + q + j) != wanted[j]) match = false;
        if (!match) continue;
        int before = 0, after = 0;
        for (int x : trip.q2) {
            if (x <= q) ++before;
            if (x >= q + L) ++after;
        }
        if (before >= lo_mass && after >= lo_mass) return R::success(q);
    }
    return R::fail("link", "no link matching the wanted orientation inside P2");
}

SlotFlavours count_slot_flavours(const UsefulTripartition& trip, int link_offset,
                                 int link_len, bool link_flips) {
    SlotFlavours f;
    auto neighbour_a = [&](int o) {
        bool base = ((o - 1) % 2) == 0;
        if (o - 1 > link_offset + link_len && link_flips) base = !base;
        return base;
    };
    auto scan = [&](const std::vector<int>& q, bool sink) {
        for (int o : q) {
            if (o >= link_offset - 1 && o <= link_offset + link_len + 1) continue;
            bool na = neighbour_a(o);
            if (sink)
                (na ? f.a_sinks : f.b_sinks)++;
            else
                (na ? f.a_sources : f.b_sources)++;
        }
    };
    scan(trip.q1, true);
    scan(trip.q2, false);
    scan(trip.q3, true);
    return f;
}

Result<PartialEmbedding> sink_source_embed(const Digraph& g, const CyclePattern& c,
                                           const VertexPartition& part,
                                           const SinkSourceJob& job,
                                           const VertexSet& reserved) {
    using R = Result<PartialEmbedding>;
    using detail::Slot;
    const UsefulTripartition& t = job.trip;
    const int len = t.len;
    const int n = g.n();
    if (!part.A.test(job.a1)) return R::fail("sinksource", "a1 must lie in A");
    if (job.link_offset < t.o1 || job.link_offset + job.link_host.length() > t.o2)
        return R::fail("sinksource", "link must lie inside P2");

    const int lo = job.link_offset;
    const int ll = job.link_host.length();
    const bool link_flips = part.A.test(job.link_host.vertices.front()) !=
                            part.A.test(job.link_host.vertices.back());

    // host class of a plain (alternating) offset; a1 anchors A at offset 0
    auto plain_class_a = [&](int o) {
        bool base = (o % 2) == 0;
        if (o > lo + ll && link_flips) base = !base;
        return base;
    };
    // link endpoints must agree with the alternation parity
    if (part.A.test(job.link_host.vertices.front()) != plain_class_a(lo))
        return R::fail("sinksource", "link start class disagrees with alternation parity");

    // assign special vertices to usable sink/source slots in walk order
    std::vector<int> sa = job.SA.to_vector(), sb = job.SB.to_vector(),
                     ta = job.TA.to_vector(), tb = job.TB.to_vector();
    size_t isa = 0, isb = 0, ita = 0, itb = 0;
    std::vector<std::pair<int, int>> fixed_special;  // offset -> vertex

    auto slot_neighbour_a = [&](int o) { return plain_class_a(o - 1); };
    auto assign = [&](const std::vector<int>& offsets, bool sink_slot) -> bool {
        for (int o : offsets) {
            if (o >= lo - 1 && o <= lo + ll + 1) continue;  // link and its joints
            bool neigh_a = slot_neighbour_a(o);
            if (sink_slot) {
                // A-neighboured sinks host S_A, B-neighboured host T_B
                if (neigh_a && isa < sa.size())
                    fixed_special.emplace_back(o, sa[isa++]);
                else if (!neigh_a && itb < tb.size())
                    fixed_special.emplace_back(o, tb[itb++]);
            } else {
                // B-neighboured sources host S_B, A-neighboured host T_A
                if (!neigh_a && isb < sb.size())
                    fixed_special.emplace_back(o, sb[isb++]);
                else if (neigh_a && ita < ta.size())
                    fixed_special.emplace_back(o, ta[ita++]);
            }
        }
        return true;
    };
    assign(t.q1, true);
    assign(t.q2, false);
    assign(t.q3, true);
    if (isa < sa.size()) return R::fail("sinksource", "sink slots with A-neighbours < |S_A|");
    if (itb < tb.size()) return R::fail("sinksource", "sink slots with B-neighbours < |T_B|");
    if (isb < sb.size()) return R::fail("sinksource", "source slots with B-neighbours < |S_B|");
    if (ita < ta.size()) return R::fail("sinksource", "source slots with A-neighbours < |T_A|");

    std::vector<Slot> slots(len + 1);
    VertexSet pool_a = part.A, pool_b = part.B;
    slots[0] = detail::fixed_slot(job.a1, "a1");
    for (int o = 1; o <= len; ++o) {
        if (o >= lo && o <= lo + ll)
            slots[o] = detail::fixed_slot(job.link_host.vertices[o - lo], "link");
        else
            slots[o] = detail::pool_slot(plain_class_a(o) ? pool_a : pool_b,
                                         plain_class_a(o) ? "A" : "B");
    }
    for (auto [o, v] : fixed_special) slots[o] = detail::fixed_slot(v, "special");
    (void)n;
    VertexSet blocked = reserved;
    for (const Slot& sl : slots)
        if (sl.fixed) blocked.set(sl.vertex);
    return detail::run_plan(g, c, t.start, slots, blocked, "sinksource");
}

bool check_exceptional_cover(const Digraph& g, const VertexPartition& part,
                             const CyclePattern& c, const ExceptionalCover& cover,
                             std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!validate_partial(g, c, cover.cover)) return fail("cover is not a valid partial embedding");
    const auto& img = cover.cover.images;
    if (img.empty()) return fail("cover empty");
    VertexSet covered = VertexSet::of(g.n(), img);
    if (((part.S | part.T) - covered).count() != 0) return fail("EC1: S u T not covered");
    if (!part.A.test(img.front()) || !part.A.test(img.back()))
        return fail("EC2: endvertices not in A");
    int a_left = (part.A - covered).count();
    int b_left = (part.B - covered).count();
    if (a_left + 1 != b_left) return fail("EC3: |A\\V(P)|+1 != |B\\V(P)|");
    // two-way consistency: the repeats identity must reproduce EC3
    RepCounts rc = rep_counts(class_sequence(part, img));
    int predicted = part.b() - part.a() - rc.rep_b + rc.rep_a + 1;
    if (predicted != b_left - a_left)
        return fail("repeats identity disagrees with direct count");
    return true;
}

std::string cover_to_json(const ExceptionalCover& cover) {
    nlohmann::json j;
    j["start_pos"] = cover.cover.start_pos;
    j["images"] = cover.cover.images;
    j["class_sequence"] = cover.class_seq;
    j["rep_A"] = cover.reps.rep_a;
    j["rep_B"] = cover.reps.rep_b;
    j["branch"] = cover.branch;
    return j.dump();
}

}  // namespace ohc
