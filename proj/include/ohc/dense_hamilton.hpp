#pragma once

#include "ohc/pattern.hpp"

namespace ohc {

// Undirected host for the Dirac/Moon-Moser arguments.
class Ugraph {
public:
    Ugraph() = default;
    explicit Ugraph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int n() const { return n_; }
    void add_edge(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Undirected graph on V(G) whose edges are the digons of G.
Ugraph digon_graph(const Digraph& g);

// Constructive Dirac: rotation-extension with lowest-id tie-breaking,
// exhaustive fallback below n=16. Requires min degree >= n/2.
std::vector<int> dirac_hamilton_cycle(const Ugraph& h);

// Bipartite Dirac (classes of equal size m, min degree >= m/2+1).
std::vector<int> moon_moser_cycle(const Ugraph& h, const VertexSet& class_a,
                                  const VertexSet& class_b);

// Hamilton path from x to y realizing the requested direction sequence,
// via the digon graph and the x,y contraction. Requires semidegree >= 7n/8.
OrientedPath any_orientation_hamilton_path(const Digraph& g, int x, int y,
                                           const std::vector<Dir>& dirs);

// Bipartite variant: classes of size m+1 (containing x and y) and m,
// semidegree >= (7m+2)/8 in the bipartite digraph.
OrientedPath any_orientation_hamilton_path_bipartite(const Digraph& g,
                                                     const VertexSet& class_a,
                                                     const VertexSet& class_b,
                                                     int x, int y,
                                                     const std::vector<Dir>& dirs);

}  // namespace ohc
