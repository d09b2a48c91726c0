#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohc/constants.hpp"
#include "ohc/digraph.hpp"

namespace ohc {

// Partition of V(G) into A,B,S,T. Canonical orientation is a <= b and
// s <= t; classify() realizes it by the relabel/reverse transformation.
struct VertexPartition {
    VertexSet A, B, S, T;

    int a() const { return A.count(); }
    int b() const { return B.count(); }
    int s() const { return S.count(); }
    int t() const { return T.count(); }

    bool is_partition_of(int n) const;
    // 0=A, 1=B, 2=S, 3=T, -1 if unassigned
    int class_of(int v) const;
    char class_letter(int v) const;

    VertexPartition relabel_ab_swapped() const { return {B, A, T, S}; }
    VertexPartition relabel_st_swapped() const { return {A, B, T, S}; }
};

enum class ClassTag { ExpanderCandidate, STExtremal, ABExtremal, ABSTExtremal };

const char* to_string(ClassTag t);

struct ClauseResult {
    std::string clause;
    bool pass = false;
    double measured = 0;  // worst offending quantity
    double required = 0;  // bound it was compared against
};

struct Certificate {
    std::vector<ClauseResult> clauses;
    bool all_pass() const;
    const ClauseResult* find(const std::string& name) const;
    std::string to_json() const;
};

struct ExtremalClass {
    ClassTag tag = ClassTag::ExpanderCandidate;
    // Meaningful for the three extremal tags. When `reversed` is set, the
    // partition and certificate refer to the edge-reversed digraph (the
    // relabelling that enforces s <= t).
    std::optional<VertexPartition> partition;
    bool reversed = false;
    Certificate certificate;
    std::optional<VertexSet> violating_set;
};

// { x : |N^-(x) ∩ S| >= ceil(nu*n) }
VertexSet robust_outneighbourhood(const Digraph& g, const VertexSet& s, double nu);

struct ViolatingSearchBudget {
    int exact_limit = 18;       // exhaustive subset search up to this n
    int random_candidates = 2000;
    uint64_t seed = 1;
};

struct ViolatingSetResult {
    std::optional<VertexSet> set;
    bool exhaustive = false;  // absence certifies expansion only when true
};

// Looks for X with tau*n < |X| < (1-tau)*n and |RN+_nu(X)| < |X| + nu*n.
ViolatingSetResult find_violating_set(const Digraph& g, const ConstantsProfile& p,
                                      const ViolatingSearchBudget& budget = {});

// Evaluates every clause of the claimed class literally.
Certificate certify_partition(const Digraph& g, const VertexPartition& part,
                              ClassTag tag, const ConstantsProfile& p);

ExtremalClass classify(const Digraph& g, const ConstantsProfile& p,
                       const ViolatingSearchBudget& budget = {});

}  // namespace ohc
