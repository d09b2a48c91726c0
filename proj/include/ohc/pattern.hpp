#pragma once

#include <string>
#include <vector>

#include "ohc/digraph.hpp"

namespace ohc {

enum class Dir : uint8_t { Forward, Backward };

inline Dir flip(Dir d) { return d == Dir::Forward ? Dir::Backward : Dir::Forward; }

// Orientation of the n-cycle: dirs[i] orients the cycle edge between
// position i and position (i+1) mod n, Forward meaning i -> i+1.
// Sinks and sources are derived, never stored.
class CyclePattern {
public:
    CyclePattern() = default;
    explicit CyclePattern(std::vector<Dir> dirs);

    int n() const { return int(dirs_.size()); }
    Dir dir(int i) const { return dirs_[mod(i)]; }
    const std::vector<Dir>& dirs() const { return dirs_; }

    // Position p is a sink iff both incident cycle edges point into p.
    bool is_sink(int p) const {
        return dir(p - 1) == Dir::Forward && dir(p) == Dir::Backward;
    }
    bool is_source(int p) const {
        return dir(p - 1) == Dir::Backward && dir(p) == Dir::Forward;
    }

    int sink_count() const;
    int source_count() const;

    bool consistent() const;    // all edges oriented the same way
    bool antidirected() const;  // no consistent subpath of length two

    // Length of the subpath from position i to position j, walking forward.
    int distance(int i, int j) const { return (mod(j) - mod(i) + n()) % n(); }

    CyclePattern rotated(int r) const;
    // Traversal of the cycle in the opposite sense (reverses the sequence
    // and flips every direction); embeds in the same digraphs.
    CyclePattern reversed_traversal() const;
    // Every edge direction flipped in place; embeds in the reversed digraph.
    CyclePattern edge_reversed() const;

    std::string to_string() const;
    static CyclePattern from_string(const std::string& s);
    static CyclePattern all_forward(int n);
    static CyclePattern alternating(int n);  // requires n even

    bool operator==(const CyclePattern& o) const = default;

private:
    int mod(int i) const {
        int n_ = n();
        return ((i % n_) + n_) % n_;
    }
    std::vector<Dir> dirs_;
};

// Path with an explicit direction per consecutive pair of vertices.
struct OrientedPath {
    std::vector<int> vertices;
    std::vector<Dir> dirs;  // dirs[i] orients the step vertices[i] -- vertices[i+1]

    int order() const { return int(vertices.size()); }
    int length() const { return int(dirs.size()); }
    bool validate(const Digraph& g) const;
};

// Full embedding: images[i] hosts cycle position i.
struct Embedding {
    std::vector<int> images;
};

// Contiguous partial embedding: images[k] hosts position start_pos + k (mod n).
struct PartialEmbedding {
    int start_pos = 0;
    std::vector<int> images;
};

bool validate_embedding(const Digraph& g, const CyclePattern& c, const Embedding& e);
bool validate_partial(const Digraph& g, const CyclePattern& c, const PartialEmbedding& p);

}  // namespace ohc
