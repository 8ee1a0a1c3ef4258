#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

// Only raw mt19937_64 output is consumed (never std::*_distribution), so a
// (generator, seed) pair yields the same graph on every standard library.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the index-th independent stream derived from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform integer in [0, bound), bound > 0, without modulo bias.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle_in_place(std::vector<T>& xs, Rng& rng) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
}

// Mutable n x n color table used while constructing or repairing samples.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : n_(n), color_(n * n, kNoColor) {}
    explicit GraphBuilder(const ColoredGraph& g) : GraphBuilder(g.order()) {
        for (const auto& e : g.edges()) set(e.u, e.v, e.color);
    }

    std::size_t order() const { return n_; }
    Color get(Vertex a, Vertex b) const { return color_[a * n_ + b]; }
    void set(Vertex a, Vertex b, Color c) {
        color_[a * n_ + b] = c;
        color_[b * n_ + a] = c;
        if (c > max_color_) max_color_ = c;
    }
    void erase(Vertex a, Vertex b) { set(a, b, kNoColor); }
    Color max_color() const { return max_color_; }

    bool has_color_at(Vertex v, Color c) const {
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && get(v, u) == c) return true;
        return false;
    }

    std::size_t color_degree(Vertex v) const {
        std::vector<Color> cs;
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && get(v, u) != kNoColor) cs.push_back(get(v, u));
        std::sort(cs.begin(), cs.end());
        return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
    }

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && get(v, u) != kNoColor) ++d;
        return d;
    }

    ColoredGraph build() const {
        std::vector<ColoredEdge> edges;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (get(u, v) != kNoColor) edges.push_back({u, v, get(u, v)});
        return ColoredGraph(n_, edges);
    }

private:
    std::size_t n_;
    std::vector<Color> color_;
    Color max_color_ = kNoColor;
};

// Balanced complete 3-partite graph with parts of size k-1, properly colored
// by a Latin square per part pair: the edge between index i of one part and
// index j of the next gets (i + j) mod (k-1) offset into that pair's own
// color range (AB: 1.., BC: k.., CA: 2k-1..).
inline ColoredGraph gen_example1(std::size_t k) {
    if (k < 2) throw std::invalid_argument("gen_example1: k must be >= 2");
    const std::size_t m = k - 1;
    GraphBuilder b(3 * m);
    auto part = [m](std::size_t p, std::size_t i) { return static_cast<Vertex>(p * m + i); };
    for (std::size_t p = 0; p < 3; ++p) {
        const std::size_t q = (p + 1) % 3;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                b.set(part(p, i), part(q, j), static_cast<Color>(1 + p * m + (i + j) % m));
    }
    return b.build();
}

// G(n, p) with uniform colors from 1..c.
inline ColoredGraph gen_random_colored(std::size_t n, double p, Color c, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_colored: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random_colored: p outside [0,1]");
    if (c < 1) throw std::invalid_argument("gen_random_colored: palette must be >= 1");
    Rng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool present = unit_real(rng) < p;
            const auto col = static_cast<Color>(1 + uniform_below(rng, c));
            if (present) b.set(u, v, col);
        }
    return b.build();
}

// Uncolored G(n, p).
inline SimpleGraph gen_random_simple(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit_real(rng) < p) g.add_edge(u, v);
    return g;
}

// K_n colored by the round-robin 1-factorization (n-1 colors for even n, n for
// odd n), then colors permuted by the seed.
inline ColoredGraph gen_proper_complete(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_proper_complete: n must be >= 2");
    const std::size_t even = n % 2 == 0 ? n : n + 1;  // odd n: one phantom vertex
    const std::size_t rounds = even - 1;
    std::vector<Color> perm(rounds);
    for (std::size_t i = 0; i < rounds; ++i) perm[i] = static_cast<Color>(i + 1);
    Rng rng(seed);
    shuffle_in_place(perm, rng);

    GraphBuilder b(n);
    const auto fixed = static_cast<Vertex>(even - 1);
    for (std::size_t r = 0; r < rounds; ++r) {
        auto pair = [&](Vertex a, Vertex c) {
            if (a < n && c < n) b.set(a, c, perm[r]);
        };
        pair(static_cast<Vertex>(r), fixed);
        for (std::size_t i = 1; i < even / 2; ++i)
            pair(static_cast<Vertex>((r + i) % rounds), static_cast<Vertex>((r + rounds - i) % rounds));
    }
    return b.build();
}

// K_n with a random proper coloring: edges visited in random order, each
// takes a uniform color from 1..2n-3 not yet used at either endpoint.
inline ColoredGraph gen_random_proper_complete(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_proper_complete: n must be >= 2");
    Rng rng(seed);
    std::vector<Edge> order;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) order.push_back({u, v});
    shuffle_in_place(order, rng);
    const std::size_t palette = n == 2 ? 1 : 2 * n - 3;
    GraphBuilder b(n);
    std::vector<std::vector<bool>> used(n, std::vector<bool>(palette + 1, false));
    for (const auto& e : order) {
        std::vector<Color> free;
        for (Color c = 1; c <= palette; ++c)
            if (!used[e.u][c] && !used[e.v][c]) free.push_back(c);
        const Color c = free[uniform_below(rng, free.size())];
        used[e.u][c] = used[e.v][c] = true;
        b.set(e.u, e.v, c);
    }
    return b.build();
}

// Complete multipartite graph with the given part sizes. colors == 0 gives
// every edge its own color; otherwise colors are uniform from 1..colors.
inline ColoredGraph gen_complete_multipartite(const std::vector<std::size_t>& parts, Color colors,
                                              std::uint64_t seed) {
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (std::size_t i = 0; i < parts[p]; ++i) part_of.push_back(p);
    const std::size_t n = part_of.size();
    Rng rng(seed);
    GraphBuilder b(n);
    Color next = 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                b.set(u, v, colors == 0 ? next++ : static_cast<Color>(1 + uniform_below(rng, colors)));
    return b.build();
}

enum class GeneratorKind { example1, random_colored, proper_complete, complete_multipartite };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::random_colored;
    std::size_t k = 2;                 // example1
    std::size_t n = 1;                 // random_colored, proper_complete
    double p = 0.5;                    // random_colored
    Color colors = 1;                  // random_colored, complete_multipartite
    std::vector<std::size_t> parts;    // complete_multipartite
    std::uint64_t seed = 0;
};

inline ColoredGraph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::example1: return gen_example1(spec.k);
        case GeneratorKind::random_colored:
            return gen_random_colored(spec.n, spec.p, spec.colors, spec.seed);
        case GeneratorKind::proper_complete: return gen_proper_complete(spec.n, spec.seed);
        case GeneratorKind::complete_multipartite:
            return gen_complete_multipartite(spec.parts, spec.colors, spec.seed);
    }
    throw std::invalid_argument("unknown generator kind");
}

// Raises the color degree of every vertex to at least `target` by adding
// edges (or recoloring edges of repeated colors at saturated vertices) in
// colors absent at both endpoints. Palette colors 1..palette are preferred;
// a fresh color is used when none is free. Returns false if target > n-1.
inline bool repair_color_degree(GraphBuilder& b, std::size_t target, Color palette, Rng& rng) {
    const std::size_t n = b.order();
    if (n == 0) return true;
    if (target > n - 1) return false;

    auto pick_color = [&](Vertex a, Vertex c) {
        std::vector<Color> free;
        for (Color col = 1; col <= palette; ++col)
            if (!b.has_color_at(a, col) && !b.has_color_at(c, col)) free.push_back(col);
        if (free.empty()) return static_cast<Color>(std::max<Color>(b.max_color(), palette) + 1);
        return free[uniform_below(rng, free.size())];
    };

    for (;;) {
        std::vector<Vertex> deficient;
        for (Vertex v = 0; v < n; ++v)
            if (b.color_degree(v) < target) deficient.push_back(v);
        if (deficient.empty()) return true;
        const Vertex v = deficient[uniform_below(rng, deficient.size())];

        std::vector<Vertex> non_nbrs;
        for (Vertex u = 0; u < n; ++u)
            if (u != v && b.get(v, u) == kNoColor) non_nbrs.push_back(u);
        if (!non_nbrs.empty()) {
            const Vertex u = non_nbrs[uniform_below(rng, non_nbrs.size())];
            b.set(v, u, pick_color(v, u));
            continue;
        }
        // v is adjacent to everything; some color repeats at v since d^c(v) < d(v).
        std::vector<Vertex> repeated;
        for (Vertex u = 0; u < n; ++u) {
            if (u == v) continue;
            const Color c = b.get(v, u);
            for (Vertex w = 0; w < n; ++w)
                if (w != v && w != u && b.get(v, w) == c) {
                    repeated.push_back(u);
                    break;
                }
        }
        const Vertex u = repeated[uniform_below(rng, repeated.size())];
        b.set(v, u, pick_color(v, u));
    }
}

// Uncolored counterpart: adds random non-edges at vertices of degree < target.
inline bool repair_degree(SimpleGraph& g, std::size_t target, Rng& rng) {
    const std::size_t n = g.order();
    if (n == 0) return true;
    if (target > n - 1) return false;
    for (;;) {
        std::vector<Vertex> deficient;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) < target) deficient.push_back(v);
        if (deficient.empty()) return true;
        const Vertex v = deficient[uniform_below(rng, deficient.size())];
        std::vector<Vertex> non_nbrs;
        for (Vertex u = 0; u < n; ++u)
            if (u != v && !g.adjacent(v, u)) non_nbrs.push_back(u);
        g.add_edge(v, non_nbrs[uniform_below(rng, non_nbrs.size())]);
    }
}

}  // namespace rainbow
