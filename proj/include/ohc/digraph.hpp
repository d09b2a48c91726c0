#pragma once

#include <string>
#include <vector>

#include "ohc/bitset.hpp"

namespace ohc {

// Directed graph on labelled vertices 0..n-1. Digons (both orientations
// between a pair) are allowed, loops are not. Immutable after construction
// as far as queries are concerned; in_adj is kept as the exact transpose
// of out_adj.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int n() const { return n_; }

    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const { return out_[u].test(v); }
    bool has_digon(int u, int v) const { return out_[u].test(v) && out_[v].test(u); }

    const VertexSet& out(int v) const { return out_[v]; }
    const VertexSet& in(int v) const { return in_[v]; }

    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }

    long arc_count() const;

    // All arcs reversed.
    Digraph reversed() const;

    // Arc count from A into B (counts u->v with u in A, v in B).
    long arcs_between(const VertexSet& a, const VertexSet& b) const;

    std::string to_text() const;
    static Digraph from_text(const std::string& text);

    bool operator==(const Digraph& o) const { return out_ == o.out_; }

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

// min over vertices of min(out-degree, in-degree)
int min_semidegree(const Digraph& g);

Digraph read_digraph_file(const std::string& path);
void write_digraph_file(const Digraph& g, const std::string& path,
                        const std::string& header_comment = "");

}  // namespace ohc
