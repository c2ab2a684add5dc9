#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bondage {

/// Dynamic bitset over vertex ids. Sized once; all binary operations
/// require equal sizes.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }
    static VertexSet of(int n, const std::vector<int>& members) {
        VertexSet s(n);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(int v) { words_[v >> 6] |= (uint64_t{1} << (v & 63)); }
    void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Lowest member, or -1.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }
    /// Lowest member greater than v, or -1.
    int next(int v) const {
        int i = v + 1;
        if (i >= n_) return -1;
        std::size_t w = static_cast<std::size_t>(i >> 6);
        uint64_t word = words_[w] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (word) return static_cast<int>(w * 64) + std::countr_zero(word);
            if (++w >= words_.size()) return -1;
            word = words_[w];
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
    /// Set difference.
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
    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace bondage
