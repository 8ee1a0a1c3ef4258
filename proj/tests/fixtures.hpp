#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/simple_graph.hpp"

namespace fx {

using namespace rainbow;

inline ColoredGraph rainbow_k3() { return ColoredGraph(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}); }
inline ColoredGraph mono_k3() { return ColoredGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}); }

inline ColoredGraph mono_complete(std::size_t n) {
    std::vector<ColoredEdge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v, 1});
    return ColoredGraph(n, es);
}

// K_4 with each color class a perfect matching.
inline ColoredGraph proper_k4() {
    return ColoredGraph(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}});
}

inline SimpleGraph path(std::size_t n) {
    SimpleGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline SimpleGraph cycle(std::size_t n) {
    auto g = path(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

inline SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Join u and v unless their circular distance is at most r. Every vertex
// then has degree n - 1 - 2r.
inline SimpleGraph anti_circulant(std::size_t n, std::size_t r) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::min(v - u, static_cast<Vertex>(n) - (v - u)) > r) g.add_edge(u, v);
    return g;
}

inline SimpleGraph petersen() {
    SimpleGraph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

// Disjoint union; b's vertices are shifted past a's.
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.order() + b.order());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    const auto s = static_cast<Vertex>(a.order());
    for (const auto& e : b.edges()) g.add_edge(e.u + s, e.v + s);
    return g;
}

inline SimpleGraph with_isolated(const SimpleGraph& a, std::size_t extra) {
    return disjoint_union(a, SimpleGraph(extra));
}

inline ColoredGraph shuffled_colors(const ColoredGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Color> perm;
    for (auto c : g.palette()) perm.push_back(c);
    auto image = perm;
    shuffle_in_place(image, rng);
    return recolor(g, [&](Color c) {
        const auto it = std::lower_bound(perm.begin(), perm.end(), c);
        return image[static_cast<std::size_t>(it - perm.begin())] * 7 + 3;
    });
}

// The graph with its vertices renamed by `perm` (old -> new).
inline ColoredGraph relabel(const ColoredGraph& g, const std::vector<Vertex>& perm) {
    std::vector<ColoredEdge> es;
    for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v], e.color});
    return ColoredGraph(g.order(), es);
}

inline std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
    std::vector<Vertex> p(n);
    for (Vertex i = 0; i < n; ++i) p[i] = i;
    shuffle_in_place(p, rng);
    return p;
}

}  // namespace fx
