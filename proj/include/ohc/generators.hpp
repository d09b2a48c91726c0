#pragma once

#include <functional>
#include <random>

#include "ohc/constants.hpp"
#include "ohc/digraph.hpp"
#include "ohc/structure.hpp"

namespace ohc {

// Deterministic across platforms: raw mersenne output only, no
// distribution classes.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    uint64_t next() { return gen_(); }
    int below(int bound) { return bound <= 1 ? 0 : int(next() % uint64_t(bound)); }
    double unit() { return double(next() >> 11) * 0x1p-53; }
    template <class T> void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 gen_;
};

Digraph complete_digraph(int n);
Digraph two_cliques(int n);                  // n even; two disjoint complete digraphs
Digraph complete_bipartite_digraph(int n);   // classes floor(n/2), ceil(n/2)

// Random digraph conditioned on min semidegree >= delta
// (independent arcs, then lowest-id repair of deficient vertices).
Digraph random_min_semidegree(int n, int delta, uint64_t seed);

// Extremal families for the antidirected threshold, loaded from the
// shipped edge-list resources and checked against the figure-caption
// constraints (independent A and B of size m-1, semidegree exactly m).
struct FFamilyInstance {
    Digraph g;
    VertexSet A, B;
    int m = 0;
    int variant = 1;
};
FFamilyInstance f_family(int variant, int m, const std::string& resource_dir);

// The construction behind the shipped resources. Both variants surface
// in the exhaustive m=2 and m=3 censuses and stay antidirected-free for
// every oracle-checkable order.
FFamilyInstance f_family_build(int variant, int m);

std::string f_family_resource_text(const FFamilyInstance& inst);

// Exhaustive census: all 2m-vertex digraphs with semidegree >= m and no
// antidirected Hamilton cycle, one representative per isomorphism class.
std::vector<Digraph> search_antidirected_obstructions(int m);

struct SyntheticInstance {
    Digraph g;
    VertexPartition partition;
};

SyntheticInstance synthetic_ST(int n, const ConstantsProfile& p, uint64_t seed);
SyntheticInstance synthetic_AB(int n, const ConstantsProfile& p, uint64_t seed);
SyntheticInstance synthetic_ABST(int n, const ConstantsProfile& p, uint64_t seed);

}  // namespace ohc
