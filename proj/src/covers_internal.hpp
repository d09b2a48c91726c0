#pragma once

#include "ohc/covers.hpp"

namespace ohc {
namespace detail {

// One cycle position of a planned partial embedding: either a concrete
// vertex or a free choice from a pool.
struct Slot {
    bool fixed = false;
    int vertex = -1;   // when fixed
    VertexSet pool;    // when free
    const char* label = "";  // diagnostic
};

// Executes a slot plan along C positions [start, start+len], greedily
// picking the lowest-id feasible host with one step of lookahead.
// `reserved` vertices are never touched.
Result<PartialEmbedding> run_plan(const Digraph& g, const CyclePattern& c,
                                  int start, const std::vector<Slot>& slots,
                                  const VertexSet& reserved, const char* stage);

// Plan pieces
Slot fixed_slot(int v, const char* label = "");
Slot pool_slot(const VertexSet& pool, const char* label = "");

// Walk direction of the C edge entering offset o (o >= 1).
inline bool edge_forward(const CyclePattern& c, int start, int o) {
    return c.dir(start + o - 1) == Dir::Forward;
}

// Incremental slot plan along C starting at a fixed position. Fills the
// gaps between scheduled pieces with A/B alternation hosts and tracks the
// class the alternation expects next.
class WindowPlan {
public:
    WindowPlan(const CyclePattern& c, const VertexPartition& part, int start,
               bool start_in_a = true)
        : c_(c), part_(part), start_(start), next_a_(start_in_a) {}

    int size() const { return int(slots_.size()); }
    bool next_is_a() const { return next_a_; }
    Dir dir_at(int offset) const { return c_.dir(start_ + offset); }

    // one alternation host of the expected class
    void lay_alternation() {
        slots_.push_back(pool_slot(next_a_ ? part_.A : part_.B, next_a_ ? "A" : "B"));
        next_a_ = !next_a_;
    }
    // walk until the upcoming slot expects `want_a`
    void align_class(bool want_a) {
        if (next_a_ != want_a) lay_alternation();
    }
    // fixed host; `counts_ab` says whether it advances the alternation
    void lay_fixed(int v, bool counts_ab, const char* label = "") {
        slots_.push_back(fixed_slot(v, label));
        if (counts_ab) next_a_ = !next_a_;
    }
    // free host from an explicit pool; `counts_ab` advances the
    // alternation when the pool lies inside A u B
    void lay_pool_custom(const VertexSet& pool, bool counts_ab, const char* label) {
        slots_.push_back(pool_slot(pool, label));
        if (counts_ab) next_a_ = !next_a_;
    }
    // direction word of length k starting at the next offset?
    bool word_matches(const std::vector<Dir>& w) const {
        for (size_t j = 0; j < w.size(); ++j)
            if (c_.dir(start_ + size() + int(j)) != w[j]) return false;
        return true;
    }
    std::vector<Slot> take() { return std::move(slots_); }

private:
    const CyclePattern& c_;
    const VertexPartition& part_;
    int start_;
    bool next_a_;
    std::vector<Slot> slots_;
};

}  // namespace detail
}  // namespace ohc
