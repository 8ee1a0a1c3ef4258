#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;

// Fixed-universe bitset over vertex ids 0..n-1. Iteration is ascending.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }

    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
    bool contains(Vertex v) const {
        return v < universe_ && (words_[v >> 6] & bit(v)) != 0;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    std::size_t intersection_size(const VertexSet& o) const {
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return total;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                const auto bitpos = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<Vertex>(i * 64 + bitpos));
                w &= w - 1;
            }
        }
    }

    // Smallest member; the set must be nonempty.
    Vertex front() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return static_cast<Vertex>(universe_);
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    static VertexSet all(std::size_t universe) {
        VertexSet s(universe);
        for (Vertex v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    template <class Range>
    static VertexSet of(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    bool operator==(const VertexSet&) const = default;

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63u); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
