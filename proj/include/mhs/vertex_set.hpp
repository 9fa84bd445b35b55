#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace mhs {

using Vertex = int;

// Subset of the vertices 0..universe-1 of one graph, stored as 64-bit blocks.
// Iteration is always in ascending vertex order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (Vertex v : members) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(Vertex v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(Vertex v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(Vertex v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    int size() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.w_) w = ~w;
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    // lowest member, or -1 when empty
    Vertex first() const { return next(-1); }

    // lowest member strictly greater than v, or -1
    Vertex next(Vertex v) const {
        std::size_t i = v < 0 ? 0 : static_cast<std::size_t>(v) >> 6;
        if (i >= w_.size()) return -1;
        std::uint64_t w = w_[i];
        if (v >= 0) {
            int b = v & 63;
            w &= b == 63 ? 0 : ~std::uint64_t{0} << (b + 1);
        }
        for (;;) {
            if (w) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator(const VertexSet* s, Vertex v) : s_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next(v_);
            return *this;
        }
        const_iterator operator++(int) {
            const_iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* s_;
        Vertex v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    // canonical order: lexicographic over the ascending member lists,
    // with a proper prefix sorting before its extensions
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        Vertex x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x == -1 && y != -1;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(n_);
        for (auto w : w_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

    std::string str() const {
        std::string s = "{";
        for (Vertex v : *this) {
            if (s.size() > 1) s += ' ';
            s += std::to_string(v);
        }
        return s + "}";
    }

private:
    void trim() {
        int rem = n_ & 63;
        if (rem && !w_.empty()) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mhs
