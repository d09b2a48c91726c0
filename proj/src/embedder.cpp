#include "ohc/embedder.hpp"

#include <chrono>
#include <cmath>

#include "covers_internal.hpp"
#include "json.hpp"
#include "ohc/dense_hamilton.hpp"
#include "ohc/oracle.hpp"

namespace ohc {

const char* to_string(EmbedStatus s) {
    switch (s) {
        case EmbedStatus::Found: return "found";
        case EmbedStatus::NotFoundProven: return "not_found";
        case EmbedStatus::AntidirectedUnsupported: return "antidirected_unsupported";
        case EmbedStatus::OracleLimitExceeded: return "oracle_limit_exceeded";
        case EmbedStatus::ConstructorFailed: return "constructor_failed";
    }
    return "?";
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

}  // namespace

Result<Embedding> complete_from_cover(const Digraph& g, const ExceptionalCover& cover,
                                      const CyclePattern& c,
                                      const VertexPartition& part) {
    using R = Result<Embedding>;
    const int n = g.n();
    std::string why;
    if (!check_exceptional_cover(g, part, c, cover, &why))
        return R::fail("complete_from_cover", "cover rejected: " + why);

    const auto& img = cover.cover.images;
    VertexSet covered = VertexSet::of(n, img);
    const int x = img.back(), y = img.front();
    VertexSet residual_a = (part.A - covered);
    residual_a.set(x);
    residual_a.set(y);
    VertexSet residual_b = part.B - covered;
    const int m = residual_b.count();
    if (residual_a.count() != m + 1)
        return R::fail("complete_from_cover", "residual classes not m+1 / m");
    if (m < 1) return R::fail("complete_from_cover", "residual too small");

    // direction word of the uncovered stretch, cover end -> cover start
    const int len = int(img.size()) - 1;
    const int tail_edges = n - len;
    std::vector<Dir> dirs(tail_edges);
    for (int j = 0; j < tail_edges; ++j)
        dirs[j] = c.dir(cover.cover.start_pos + len + j);

    // restrict to the residual bipartite digraph, reindexed tightly
    VertexSet all = residual_a | residual_b;
    std::vector<int> back = all.to_vector();
    std::vector<int> fwd(n, -1);
    for (int i = 0; i < int(back.size()); ++i) fwd[back[i]] = i;
    const int nr = int(back.size());
    Digraph residual(nr);
    VertexSet ra(nr), rb(nr);
    all.for_each([&](int u) {
        (residual_a.test(u) ? ra : rb).set(fwd[u]);
        VertexSet outs = g.out(u) & (residual_a.test(u) ? residual_b : residual_a);
        outs.for_each([&](int v) { residual.add_arc(fwd[u], fwd[v]); });
    });

    OrientedPath path;
    try {
        path = any_orientation_hamilton_path_bipartite(residual, ra, rb, fwd[x],
                                                       fwd[y], dirs);
    } catch (const std::exception& ex) {
        int d = nr;
        for (int v = 0; v < nr; ++v)
            d = std::min({d, residual.out_degree(v), residual.in_degree(v)});
        return R::fail("complete_from_cover",
                       std::string("residual completion failed (") + ex.what() +
                           "; measured semidegree " + std::to_string(d) + "/" +
                           std::to_string(m) + ")");
    }
    for (int& v : path.vertices) v = back[v];

    Embedding e;
    e.images.assign(n, -1);
    for (int j = 0; j <= len; ++j)
        e.images[((cover.cover.start_pos + j) % n + n) % n] = img[j];
    for (int j = 1; j + 1 < int(path.vertices.size()); ++j)
        e.images[((cover.cover.start_pos + len + j) % n + n) % n] = path.vertices[j];
    if (!validate_embedding(g, c, e))
        return R::fail("complete_from_cover", "assembled embedding failed validation");
    return R::success(std::move(e));
}

namespace {

// Extends a cover with an alternating stretch hosting every vertex whose
// cross-degree dips below the given floor; the stretch alternates, so the
// repeats ledger and (EC3) survive.
Result<ExceptionalCover> extend_over_weak(const Digraph& g, const VertexPartition& part,
                                          const CyclePattern& c, ExceptionalCover cover,
                                          double floor_deg) {
    using R = Result<ExceptionalCover>;
    const int n = g.n();
    VertexSet covered = VertexSet::of(n, cover.cover.images);
    std::vector<int> weak_a, weak_b;
    (part.A - covered).for_each([&](int v) {
        if (std::min(g.out(v).intersect_count(part.B),
                     g.in(v).intersect_count(part.B)) < floor_deg)
            weak_a.push_back(v);
    });
    (part.B - covered).for_each([&](int v) {
        if (std::min(g.out(v).intersect_count(part.A),
                     g.in(v).intersect_count(part.A)) < floor_deg)
            weak_b.push_back(v);
    });
    if (weak_a.empty() && weak_b.empty()) return R::success(std::move(cover));

    const int start = cover.cover.start_pos + int(cover.cover.images.size());
    detail::WindowPlan plan(c, part, start, !part.A.test(cover.cover.images.back()));
    size_t ia = 0, ib = 0;
    const int guard = n - int(cover.cover.images.size()) - 4;
    while (ia < weak_a.size() || ib < weak_b.size()) {
        if (plan.size() >= guard)
            return R::fail("extend_weak", "ran out of cycle hosting weak vertices");
        if (plan.next_is_a() && ia < weak_a.size()) {
            plan.lay_fixed(weak_a[ia++], true, "weakA");
            continue;
        }
        if (!plan.next_is_a() && ib < weak_b.size()) {
            plan.lay_fixed(weak_b[ib++], true, "weakB");
            continue;
        }
        plan.lay_alternation();
    }
    if (plan.next_is_a()) plan.lay_alternation();  // end in A

    std::vector<detail::Slot> slots = plan.take();
    VertexSet reserved = covered;
    for (const auto& sl : slots)
        if (sl.fixed) reserved.set(sl.vertex);
    auto pe = detail::run_plan(g, c, start, slots, reserved, "extend_weak");
    if (!pe.ok()) return R::fail("extend_weak", pe.failure.inequality);
    int u = cover.cover.images.back(), v = pe->images.front();
    bool fwd = c.dir(start - 1) == Dir::Forward;
    if (!(fwd ? g.has_arc(u, v) : g.has_arc(v, u)))
        return R::fail("extend_weak", "splice edge missing");
    cover.cover.images.insert(cover.cover.images.end(), pe->images.begin(),
                              pe->images.end());
    cover.class_seq = class_sequence(part, cover.cover.images);
    cover.reps = rep_counts(cover.class_seq);
    std::string why;
    if (!check_exceptional_cover(g, part, c, cover, &why))
        return R::fail("extend_weak", "extended cover broke the checks: " + why);
    return R::success(std::move(cover));
}

EmbedResult run_extremal(const Digraph& g, const CyclePattern& c,
                         const ConstantsProfile& p, const ExtremalClass& ec) {
    EmbedResult r;
    r.classification = ec.tag;

    // the s<=t normalization may have reversed every edge; transpose
    // duality lets the same images answer the original instance
    Digraph host_store;
    const Digraph* host = &g;
    CyclePattern hc = c;
    if (ec.reversed) {
        host_store = g.reversed();
        host = &host_store;
        hc = c.edge_reversed();
    }
    const VertexPartition& part = *ec.partition;

    if (ec.tag == ClassTag::STExtremal) {
        auto full = embed_st_pipeline(*host, part, hc, p);
        if (!full.ok()) {
            r.status = EmbedStatus::ConstructorFailed;
            r.failure_stage = full.failure.stage + ": " + full.failure.inequality;
            return r;
        }
        if (!validate_embedding(g, c, *full)) {
            r.status = EmbedStatus::ConstructorFailed;
            r.failure_stage = "st pipeline: reversal transfer failed validation";
            return r;
        }
        r.status = EmbedStatus::Found;
        r.embedding = *full;
        return r;
    }

    Result<ExceptionalCover> cover =
        Result<ExceptionalCover>::fail("pipeline", "unsupported class");
    double floor_deg = 0;
    if (ec.tag == ClassTag::ABExtremal) {
        cover = exceptional_cover_AB(*host, part, hc, p);
        floor_deg = host->n() / 2.0 - p.eps3 * host->n();
    } else if (ec.tag == ClassTag::ABSTExtremal) {
        cover = exceptional_cover_ABST(*host, part, hc, p);
        floor_deg = part.b() - std::pow(p.eps, 1.0 / 3.0) * host->n();
    }
    if (!cover.ok()) {
        r.status = EmbedStatus::ConstructorFailed;
        r.failure_stage = cover.failure.stage + ": " + cover.failure.inequality;
        return r;
    }
    auto extended = extend_over_weak(*host, cover->partition, hc, *cover, floor_deg);
    if (!extended.ok()) {
        r.status = EmbedStatus::ConstructorFailed;
        r.failure_stage = extended.failure.stage + ": " + extended.failure.inequality;
        return r;
    }
    auto full = complete_from_cover(*host, *extended, hc, extended->partition);
    if (!full.ok()) {
        r.status = EmbedStatus::ConstructorFailed;
        r.failure_stage = full.failure.stage + ": " + full.failure.inequality;
        return r;
    }
    if (!validate_embedding(g, c, *full)) {
        r.status = EmbedStatus::ConstructorFailed;
        r.failure_stage = "pipeline: reversal transfer failed validation";
        return r;
    }
    r.status = EmbedStatus::Found;
    r.embedding = *full;
    return r;
}

}  // namespace

EmbedResult embed_cycle(const Digraph& g, const CyclePattern& c,
                        const ConstantsProfile& p, const EmbedOptions& opt) {
    if (g.n() != c.n()) throw std::invalid_argument("embed_cycle: dimension mismatch");
    auto t0 = std::chrono::steady_clock::now();
    EmbedResult r;

    auto run_oracle = [&]() {
        if (g.n() > opt.oracle_limit) {
            r.status = EmbedStatus::OracleLimitExceeded;
            r.failure_stage = "oracle: instance above the configured limit";
            return;
        }
        OracleOptions oo;
        oo.limit = opt.oracle_limit;
        oo.threads = opt.threads;
        auto e = oracle_embed(g, c, oo);
        r.used_oracle = true;
        if (e) {
            r.status = EmbedStatus::Found;
            r.embedding = *e;
        } else {
            r.status = EmbedStatus::NotFoundProven;
        }
    };

    if (opt.strategy == EmbedStrategy::Oracle) {
        run_oracle();
        r.total_ms = ms_since(t0);
        return r;
    }

    if (c.antidirected()) {
        if (opt.strategy == EmbedStrategy::Auto && g.n() <= opt.oracle_limit) {
            run_oracle();
        } else {
            r.status = EmbedStatus::AntidirectedUnsupported;
            r.failure_stage = "antidirected patterns route to the oracle only";
        }
        r.total_ms = ms_since(t0);
        return r;
    }

    auto tc = std::chrono::steady_clock::now();
    ViolatingSearchBudget budget;
    budget.seed = opt.seed;
    ExtremalClass ec = classify(g, p, budget);
    r.classify_ms = ms_since(tc);
    r.classification = ec.tag;

    if (ec.tag != ClassTag::ExpanderCandidate && ec.partition &&
        ec.certificate.all_pass()) {
        auto tb = std::chrono::steady_clock::now();
        EmbedResult pipeline = run_extremal(g, c, p, ec);
        pipeline.classify_ms = r.classify_ms;
        pipeline.construct_ms = ms_since(tb);
        if (pipeline.status == EmbedStatus::Found ||
            opt.strategy == EmbedStrategy::Extremal) {
            pipeline.total_ms = ms_since(t0);
            return pipeline;
        }
        r.failure_stage = pipeline.failure_stage;
    } else if (opt.strategy == EmbedStrategy::Extremal) {
        r.status = EmbedStatus::ConstructorFailed;
        r.failure_stage = ec.tag == ClassTag::ExpanderCandidate
                              ? "expander candidate: the robust-expander embedding "
                                "is outside this artifact"
                              : "classification certificate failed";
        r.total_ms = ms_since(t0);
        return r;
    }

    // auto strategy: exact fallback at desk scale
    if (g.n() <= opt.oracle_limit) {
        run_oracle();
    } else {
        r.status = EmbedStatus::ConstructorFailed;
        if (r.failure_stage.empty())
            r.failure_stage = ec.tag == ClassTag::ExpanderCandidate
                                  ? "expander candidate: the robust-expander "
                                    "embedding is outside this artifact"
                                  : "extremal pipeline failed above the oracle limit";
    }
    r.total_ms = ms_since(t0);
    return r;
}

std::string embed_result_to_json(const EmbedResult& r, bool with_timings) {
    nlohmann::json j;
    j["schema"] = "v1";
    j["status"] = to_string(r.status);
    j["classification"] = to_string(r.classification);
    if (r.embedding) j["embedding"] = r.embedding->images;
    if (!r.failure_stage.empty()) j["failure_stage"] = r.failure_stage;
    j["used_oracle"] = r.used_oracle;
    if (with_timings)
        j["timings"] = {{"classify_ms", r.classify_ms},
                        {"construct_ms", r.construct_ms},
                        {"total_ms", r.total_ms}};
    return j.dump();
}

}  // namespace ohc
