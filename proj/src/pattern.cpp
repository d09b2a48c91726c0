#include "ohc/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace ohc {

CyclePattern::CyclePattern(std::vector<Dir> dirs) : dirs_(std::move(dirs)) {
    if (dirs_.size() < 3)
        throw std::invalid_argument("CyclePattern: need length >= 3");
}

int CyclePattern::sink_count() const {
    int c = 0;
    for (int p = 0; p < n(); ++p) c += is_sink(p);
    return c;
}

int CyclePattern::source_count() const {
    int c = 0;
    for (int p = 0; p < n(); ++p) c += is_source(p);
    return c;
}

bool CyclePattern::consistent() const {
    return std::all_of(dirs_.begin(), dirs_.end(),
                       [&](Dir d) { return d == dirs_[0]; });
}

bool CyclePattern::antidirected() const {
    for (int i = 0; i < n(); ++i)
        if (dir(i) == dir(i + 1)) return false;
    return true;
}

CyclePattern CyclePattern::rotated(int r) const {
    std::vector<Dir> d(n());
    for (int i = 0; i < n(); ++i) d[i] = dir(i + r);
    return CyclePattern(std::move(d));
}

CyclePattern CyclePattern::reversed_traversal() const {
    std::vector<Dir> d(n());
    for (int i = 0; i < n(); ++i) d[i] = flip(dir(n() - 1 - i));
    return CyclePattern(std::move(d));
}

CyclePattern CyclePattern::edge_reversed() const {
    std::vector<Dir> d(dirs_);
    for (auto& x : d) x = flip(x);
    return CyclePattern(std::move(d));
}

std::string CyclePattern::to_string() const {
    std::string s;
    s.reserve(dirs_.size());
    for (Dir d : dirs_) s += (d == Dir::Forward ? 'F' : 'B');
    return s;
}

CyclePattern CyclePattern::from_string(const std::string& s) {
    std::vector<Dir> d;
    d.reserve(s.size());
    for (char c : s) {
        if (c == 'F')
            d.push_back(Dir::Forward);
        else if (c == 'B')
            d.push_back(Dir::Backward);
        else
            throw std::invalid_argument("pattern string: expected F/B");
    }
    return CyclePattern(std::move(d));
}

CyclePattern CyclePattern::all_forward(int n) {
    return CyclePattern(std::vector<Dir>(n, Dir::Forward));
}

CyclePattern CyclePattern::alternating(int n) {
    if (n % 2) throw std::invalid_argument("alternating pattern needs even n");
    std::vector<Dir> d(n);
    for (int i = 0; i < n; ++i) d[i] = i % 2 ? Dir::Backward : Dir::Forward;
    return CyclePattern(std::move(d));
}

bool OrientedPath::validate(const Digraph& g) const {
    if (vertices.empty() || dirs.size() + 1 != vertices.size()) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < dirs.size(); ++i) {
        int u = vertices[i], v = vertices[i + 1];
        bool ok = dirs[i] == Dir::Forward ? g.has_arc(u, v) : g.has_arc(v, u);
        if (!ok) return false;
    }
    return true;
}

bool validate_embedding(const Digraph& g, const CyclePattern& c, const Embedding& e) {
    const int n = g.n();
    if (c.n() != n || int(e.images.size()) != n)
        throw std::invalid_argument("validate_embedding: dimension mismatch");
    std::vector<char> seen(n, 0);
    for (int v : e.images) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int u = e.images[i], v = e.images[(i + 1) % n];
        bool ok = c.dir(i) == Dir::Forward ? g.has_arc(u, v) : g.has_arc(v, u);
        if (!ok) return false;
    }
    return true;
}

bool validate_partial(const Digraph& g, const CyclePattern& c, const PartialEmbedding& p) {
    if (c.n() != g.n()) throw std::invalid_argument("validate_partial: dimension mismatch");
    if (int(p.images.size()) > g.n())
        throw std::invalid_argument("validate_partial: interval exceeds n");
    if (p.images.empty()) return true;
    std::vector<char> seen(g.n(), 0);
    for (int v : p.images) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t k = 0; k + 1 < p.images.size(); ++k) {
        int u = p.images[k], v = p.images[k + 1];
        bool ok = c.dir(p.start_pos + int(k)) == Dir::Forward ? g.has_arc(u, v)
                                                              : g.has_arc(v, u);
        if (!ok) return false;
    }
    return true;
}

}  // namespace ohc
