#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace topstruct {

using Vertex = int;

/// Fixed-universe bitset over the vertices 0..universe-1.
///
/// Every set belonging to one graph shares the same universe size, so the
/// binary operations assume equal word counts.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }
    template <typename Range>
    static VertexSet of(int universe, const Range& vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    /// Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    /// Smallest member greater than v, or -1.
    Vertex next(Vertex v) const {
        ++v;
        if (v >= universe_) return -1;
        std::size_t i = static_cast<std::size_t>(v) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }
    /// Lexicographic order on sorted member lists.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        Vertex x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x < 0 && y >= 0;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// "{1,2,3}" with 1-based labels, for diagnostics and reports.
    std::string to_string() const {
        std::string s = "{";
        bool first_item = true;
        for (Vertex v = first(); v >= 0; v = next(v)) {
            if (!first_item) s += ',';
            s += std::to_string(v + 1);
            first_item = false;
        }
        return s + "}";
    }

    class iterator {
    public:
        iterator(const VertexSet* s, Vertex v) : s_(s), v_(v) {}
        Vertex operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_;
        Vertex v_;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace topstruct
