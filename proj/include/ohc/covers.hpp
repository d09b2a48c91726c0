#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohc/constants.hpp"
#include "ohc/pattern.hpp"
#include "ohc/structure.hpp"

namespace ohc {

// Structured not-found: constructors never panic on slack failures, they
// name the inequality that broke.
struct Failure {
    std::string stage;
    std::string inequality;
};

template <class T>
struct Result {
    std::optional<T> value;
    Failure failure;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }

    static Result success(T v) { return {std::move(v), {}}; }
    static Result fail(std::string stage, std::string inequality) {
        return {std::nullopt, {std::move(stage), std::move(inequality)}};
    }
};

struct Arc {
    int from = -1;
    int to = -1;
    bool operator==(const Arc&) const = default;
};

struct RepCounts {
    int rep_a = 0;
    int rep_b = 0;
};

// Consecutive same-class occurrences in the A/B-restricted sequence.
RepCounts rep_counts(const std::string& class_seq);

// Class letters of an embedded vertex sequence.
std::string class_sequence(const VertexPartition& part, const std::vector<int>& vertices);

enum class STEdgeVariant { I, II, III, IV };
enum class STEdgeDir { ST, TS };

// Two vertex-disjoint edges from the variant's guaranteed family.
// Variant I honors the requested directions (the others fix their own).
Result<std::pair<Arc, Arc>> two_disjoint_st_edges(const Digraph& g,
                                                  const VertexPartition& part,
                                                  STEdgeVariant variant,
                                                  STEdgeDir want1 = STEdgeDir::TS,
                                                  STEdgeDir want2 = STEdgeDir::TS);

// d+1 edges in E(T,S u B) u E(B,S): endvertices outside B distinct, each
// B vertex in at most one TB-edge and at most one BS-edge, with a TS-edge
// whenever e(T,S) > 0. Via the auxiliary bipartite graph and Konig.
Result<std::vector<Arc>> d_plus_one_matching(const Digraph& g,
                                             const VertexPartition& part, int d);

// Vertex-disjoint d+2 edges inside E(B u T, B).
Result<std::vector<Arc>> balance_matching(const Digraph& g,
                                          const VertexPartition& part, int d);

// Two length-`run_len` consistently oriented subpaths at cyclic distance k.
struct LongRunPair {
    int p1 = 0;
    int p2 = 0;
    bool p1_forward = true;
    bool p2_forward = true;
};
Result<LongRunPair> find_long_runs(const CyclePattern& c, int k, int run_len = 20);

// Four long runs spaced floor(n/4) apart.
struct FourRuns {
    int pos[4] = {0, 0, 0, 0};
    bool forward[4] = {true, true, true, true};
};
Result<FourRuns> find_four_runs(const CyclePattern& c, int run_len = 20);

// Sink-source-sink split of a sink-rich subpath. All offsets are relative
// to the subpath's initial vertex; q-sets never use the endpoints.
struct UsefulTripartition {
    int start = 0;          // C position of the initial vertex
    int len = 0;            // edge length of P
    int o1 = 0, o2 = 0;     // P1 = [0,o1], P2 = [o1,o2], P3 = [o2,len]
    std::vector<int> q1, q2, q3;  // offsets: sinks / sources / sinks
};
Result<UsefulTripartition> useful_tripartition(const CyclePattern& c, int start, int len);

// Even-length link inside P2 whose direction word matches `wanted`, with
// at least |q2|/3 source mass on each side.
Result<int> find_link(const CyclePattern& c, const UsefulTripartition& trip,
                      const std::vector<Dir>& wanted);

// Good path system entry: a consistently oriented S- or T-path in G.
struct GoodPath {
    OrientedPath path;
    bool s_path = true;  // endpoints in S (else T)
};

// Usable sink/source slots of a tripartition by host-class flavour,
// accounting for the class flip across a link at the given offset.
struct SlotFlavours {
    int a_sinks = 0;   // host S_A
    int b_sinks = 0;   // host T_B
    int a_sources = 0; // host T_A
    int b_sources = 0; // host S_B
};
SlotFlavours count_slot_flavours(const UsefulTripartition& trip, int link_offset,
                                 int link_len, bool link_flips);

// Greedy cover of the special sets at sink/source positions of a
// tripartitioned subpath, alternating between A and B elsewhere.
struct SinkSourceJob {
    VertexSet SA, SB, TA, TB;
    int a1 = -1;                // start host
    UsefulTripartition trip;    // of the subpath P (start/len inside)
    OrientedPath link_host;     // embedded copy of the link
    int link_offset = -1;       // offset of the link inside P
};
Result<PartialEmbedding> sink_source_embed(const Digraph& g, const CyclePattern& c,
                                           const VertexPartition& part,
                                           const SinkSourceJob& job,
                                           const VertexSet& reserved);

// Exceptional cover: covers S u T, both ends in A, leaves one more
// uncovered vertex in B than in A.
struct ExceptionalCover {
    PartialEmbedding cover;
    VertexPartition partition;  // context the cover was built against
    std::string class_seq;
    RepCounts reps;
    std::string branch;  // which lemma/case produced it
};

Result<ExceptionalCover> exceptional_cover_AB(const Digraph& g,
                                              const VertexPartition& part,
                                              const CyclePattern& c,
                                              const ConstantsProfile& p);

Result<ExceptionalCover> exceptional_cover_ABST(const Digraph& g,
                                                const VertexPartition& part,
                                                const CyclePattern& c,
                                                const ConstantsProfile& p);

// (EC1)-(EC3) plus the two-way repeats consistency check.
bool check_exceptional_cover(const Digraph& g, const VertexPartition& part,
                             const CyclePattern& c, const ExceptionalCover& cover,
                             std::string* why = nullptr);

// Split of C for the ST pipeline plus embedded connectors; the few-sinks
// branch also carries a good path system and its P-partition.
struct STLinking {
    bool many_sinks = true;
    VertexSet s_star, t_star;            // host split with |P_T side| = |t_star|
    std::vector<int> r_starts;           // C position of each R_i's initial vertex
    std::vector<int> r_lens;             // edge lengths
    std::vector<OrientedPath> r_hosts;   // embedded copies, interiors off T
    std::vector<GoodPath> good_paths;    // few-sinks branch only
};
Result<STLinking> linking_ST(const Digraph& g, const VertexPartition& part,
                             const CyclePattern& c, const ConstantsProfile& p);

// Disjoint embedded copies of two length-8 fragments, each with no
// repeated A/B and an odd number of S u T vertices.
Result<std::pair<OrientedPath, OrientedPath>> useful_links(
    const Digraph& g, const VertexPartition& part, const std::vector<Dir>& frag1,
    bool frag1_ab, const std::vector<Dir>& frag2, bool frag2_ab,
    const ConstantsProfile& p);

std::string cover_to_json(const ExceptionalCover& cover);

}  // namespace ohc
