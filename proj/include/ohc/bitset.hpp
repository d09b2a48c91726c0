#pragma once

#include <bit>
#include <cstdint>
#include <cassert>
#include <vector>

namespace ohc {

// Fixed-capacity vertex set packed into 64-bit words. All hot loops
// (degree counts, robust neighbourhoods, oracle pruning) run on these.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int v) {
        assert(0 <= v && v < n_);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(0 <= v && v < n_);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }
    bool test(int v) const {
        assert(0 <= v && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    int intersect_count(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const = default;

    // Lowest set vertex, or -1.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Lowest set vertex strictly above v, or -1.
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        size_t i = size_t(v) >> 6;
        uint64_t w = words_[i] & (~uint64_t{0} << (v & 63));
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    template <class F> void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        for_each([&](int v) { r.push_back(v); });
        return r;
    }

    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace ohc
