#include "ohc/oracle.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ohc {

namespace {

// One backtracking run with position 0 pinned to `start`.
class StartSearch {
public:
    StartSearch(const Digraph& g, const CyclePattern& c, int start)
        : g_(g), c_(c), n_(g.n()), start_(start), used_(g.n()), images_(g.n(), -1) {
        // req profile per position: sink needs two in-hosts, source two out-hosts
        sink_suffix_.assign(n_ + 1, 0);
        source_suffix_.assign(n_ + 1, 0);
        through_suffix_.assign(n_ + 1, 0);
        for (int p = n_ - 1; p >= 1; --p) {
            sink_suffix_[p] = sink_suffix_[p + 1] + (c.is_sink(p) ? 1 : 0);
            source_suffix_[p] = source_suffix_[p + 1] + (c.is_source(p) ? 1 : 0);
            through_suffix_[p] =
                through_suffix_[p + 1] + (!c.is_sink(p) && !c.is_source(p) ? 1 : 0);
        }
    }

    std::optional<Embedding> run(long& nodes) {
        images_[0] = start_;
        used_.set(start_);
        bool ok = extend(1);
        nodes = nodes_;
        if (!ok) return std::nullopt;
        return Embedding{images_};
    }

private:
    bool extend(int k) {
        ++nodes_;
        if (k == n_) return true;
        const int prev = images_[k - 1];
        VertexSet cand = c_.dir(k - 1) == Dir::Forward ? g_.out(prev) : g_.in(prev);
        cand.subtract(used_);
        if (k == n_ - 1) {
            // closing edge back to the start
            cand &= c_.dir(n_ - 1) == Dir::Forward ? g_.in(start_) : g_.out(start_);
            int v = cand.first();
            if (v < 0) return false;
            images_[k] = v;
            ++nodes_;
            return true;
        }
        if (cand.empty()) return false;
        if (!feasible(k)) return false;
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            images_[k] = v;
            used_.set(v);
            if (extend(k + 1)) return true;
            used_.reset(v);
        }
        images_[k] = -1;
        return false;
    }

    // Forward check: every unused vertex must still fit some unfilled
    // position, counting only hosts that can end up adjacent to it.
    bool feasible(int k) {
        VertexSet hosts = used_.complement();
        hosts.set(images_[k - 1]);
        hosts.set(start_);
        // someone must still be able to host the final position
        VertexSet closing =
            c_.dir(n_ - 1) == Dir::Forward ? g_.in(start_) : g_.out(start_);
        closing.subtract(used_);
        if (closing.empty()) return false;
        const int sinks = sink_suffix_[k], sources = source_suffix_[k],
                  through = through_suffix_[k];
        VertexSet unused = used_.complement();
        for (int v = unused.first(); v >= 0; v = unused.next(v)) {
            const int cin = g_.in(v).intersect_count(hosts);
            const int cout = g_.out(v).intersect_count(hosts);
            const int cunion = (g_.in(v) | g_.out(v)).intersect_count(hosts);
            bool fits = (sinks > 0 && cin >= 2) || (sources > 0 && cout >= 2) ||
                        (through > 0 && cin >= 1 && cout >= 1 && cunion >= 2);
            if (!fits) return false;
        }
        return true;
    }

    const Digraph& g_;
    const CyclePattern& c_;
    const int n_;
    const int start_;
    VertexSet used_;
    std::vector<int> images_;
    std::vector<int> sink_suffix_, source_suffix_, through_suffix_;
    long nodes_ = 0;
};

void check_dims(const Digraph& g, const CyclePattern& c, const OracleOptions& opt) {
    if (g.n() != c.n()) throw std::invalid_argument("oracle: dimension mismatch");
    if (g.n() > opt.limit)
        throw std::invalid_argument("oracle: instance exceeds limit " +
                                    std::to_string(opt.limit));
    if (g.n() < 3) throw std::invalid_argument("oracle: need n >= 3");
}

}  // namespace

std::optional<Embedding> oracle_embed_serial(const Digraph& g, const CyclePattern& c,
                                             const OracleOptions& opt,
                                             OracleStats* stats) {
    check_dims(g, c, opt);
    long total_nodes = 0;
    std::optional<Embedding> found;
    for (int s = 0; s < g.n() && !found; ++s) {
        long nodes = 0;
        found = StartSearch(g, c, s).run(nodes);
        total_nodes += nodes;
    }
    if (stats) stats->nodes = total_nodes;
    return found;
}

std::optional<Embedding> oracle_embed(const Digraph& g, const CyclePattern& c,
                                      const OracleOptions& opt, OracleStats* stats) {
    check_dims(g, c, opt);
    const int n = g.n();
    std::vector<std::optional<Embedding>> results(n);
    std::vector<long> nodes(n, 0);
    std::vector<char> ran(n, 0);
    std::atomic<int> best{n};

#ifdef _OPENMP
    int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int s = 0; s < n; ++s) {
        // starts above an already-found winner cannot affect the result
        if (s > best.load(std::memory_order_relaxed)) continue;
        ran[s] = 1;
        results[s] = StartSearch(g, c, s).run(nodes[s]);
        if (results[s]) {
            int cur = best.load(std::memory_order_relaxed);
            while (s < cur &&
                   !best.compare_exchange_weak(cur, s, std::memory_order_relaxed)) {
            }
        }
    }

    int winner = best.load();
    // Starts below the winner may have been skipped by a stale read; they are
    // required for the deterministic node count, so finish them now.
    for (int s = 0; s < std::min(winner, n); ++s)
        if (!ran[s]) {
            results[s] = StartSearch(g, c, s).run(nodes[s]);
            if (results[s] && s < winner) winner = s;
        }

    long total = 0;
    for (int s = 0; s <= std::min(winner, n - 1); ++s) total += nodes[s];
    if (stats) stats->nodes = total;
    if (winner < n) return results[winner];
    return std::nullopt;
}

namespace {

uint32_t pattern_mask(const CyclePattern& c) {
    uint32_t m = 0;
    for (int i = 0; i < c.n(); ++i)
        if (c.dir(i) == Dir::Backward) m |= uint32_t{1} << i;
    return m;
}

CyclePattern mask_pattern(int n, uint32_t m) {
    std::vector<Dir> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = (m >> i) & 1 ? Dir::Backward : Dir::Forward;
    return CyclePattern(std::move(d));
}

}  // namespace

void enumerate_patterns(int n, bool up_to_symmetry,
                        const std::function<void(const CyclePattern&)>& emit) {
    if (n < 3) throw std::invalid_argument("enumerate_patterns: need n >= 3");
    if (n > 24) throw std::invalid_argument("enumerate_patterns: n too large");
    const uint32_t total = uint32_t{1} << n;
    for (uint32_t m = 0; m < total; ++m) {
        CyclePattern p = mask_pattern(n, m);
        if (up_to_symmetry) {
            uint32_t canon = m;
            for (int r = 0; r < n; ++r) {
                CyclePattern q = p.rotated(r);
                canon = std::min(canon, pattern_mask(q));
                canon = std::min(canon, pattern_mask(q.reversed_traversal()));
            }
            if (canon != m) continue;
        }
        emit(p);
    }
}

std::vector<CyclePattern> all_patterns(int n, bool up_to_symmetry) {
    std::vector<CyclePattern> out;
    enumerate_patterns(n, up_to_symmetry,
                       [&](const CyclePattern& p) { out.push_back(p); });
    return out;
}

}  // namespace ohc
