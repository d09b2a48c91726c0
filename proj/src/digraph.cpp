#include "ohc/digraph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ohc {

Digraph::Digraph(int n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
}

void Digraph::add_arc(int u, int v) {
    if (u == v) throw std::invalid_argument("Digraph: self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Digraph: vertex out of range");
    out_[u].set(v);
    in_[v].set(u);
}

void Digraph::remove_arc(int u, int v) {
    out_[u].reset(v);
    in_[v].reset(u);
}

long Digraph::arc_count() const {
    long m = 0;
    for (int v = 0; v < n_; ++v) m += out_[v].count();
    return m;
}

Digraph Digraph::reversed() const {
    Digraph r(n_);
    r.out_ = in_;
    r.in_ = out_;
    return r;
}

long Digraph::arcs_between(const VertexSet& a, const VertexSet& b) const {
    long m = 0;
    a.for_each([&](int u) { m += out_[u].intersect_count(b); });
    return m;
}

std::string Digraph::to_text() const {
    std::ostringstream os;
    os << "digraph v1\n" << "n " << n_ << "\n";
    for (int u = 0; u < n_; ++u)
        out_[u].for_each([&](int v) { os << "e " << u << " " << v << "\n"; });
    return os.str();
}

Digraph Digraph::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    Digraph g;
    bool seen_magic = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!seen_magic) {
            if (line != "digraph v1")
                throw std::invalid_argument("digraph text: bad magic line");
            seen_magic = true;
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (!(ls >> n) || n < 0)
                throw std::invalid_argument("digraph text: bad n line");
            g = Digraph(n);
        } else if (tag == "e") {
            int u, v;
            if (n < 0 || !(ls >> u >> v))
                throw std::invalid_argument("digraph text: bad e line " +
                                            std::to_string(lineno));
            g.add_arc(u, v);
        } else {
            throw std::invalid_argument("digraph text: unknown tag '" + tag + "'");
        }
    }
    if (!seen_magic || n < 0)
        throw std::invalid_argument("digraph text: missing header");
    return g;
}

int min_semidegree(const Digraph& g) {
    if (g.n() == 0) throw std::invalid_argument("min_semidegree: empty digraph");
    int d = g.n();
    for (int v = 0; v < g.n(); ++v)
        d = std::min({d, g.out_degree(v), g.in_degree(v)});
    return d;
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return Digraph::from_text(ss.str());
}

void write_digraph_file(const Digraph& g, const std::string& path,
                        const std::string& header_comment) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    if (!header_comment.empty()) f << "# " << header_comment << "\n";
    f << g.to_text();
}

}  // namespace ohc
