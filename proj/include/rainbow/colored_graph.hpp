#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rainbow/simple_graph.hpp"
#include "rainbow/vertex_set.hpp"

namespace rainbow {

// Color ids are positive; 0 marks an absent edge in lookups.
using Color = std::uint32_t;
inline constexpr Color kNoColor = 0;

struct ColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color color = kNoColor;

    Edge edge() const { return Edge::of(u, v); }
    bool operator==(const ColoredEdge&) const = default;
};

// Simple undirected graph with one color per edge. Immutable once built;
// edges() is always in lexicographic (u, v) order with u < v.
class ColoredGraph {
public:
    ColoredGraph() = default;

    explicit ColoredGraph(std::size_t n)
        : n_(n), color_(n * n, kNoColor), adj_(n, VertexSet(n)), nbrs_(n) {}

    ColoredGraph(std::size_t n, std::span<const ColoredEdge> edges) : ColoredGraph(n) {
        edges_.reserve(edges.size());
        for (const auto& e : edges) {
            check_vertex(e.u);
            check_vertex(e.v);
            if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
            if (e.color == kNoColor)
                throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                 " has no color");
            if (color_[index(e.u, e.v)] != kNoColor)
                throw GraphError("duplicate edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v));
            color_[index(e.u, e.v)] = e.color;
            color_[index(e.v, e.u)] = e.color;
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
            const auto ed = e.edge();
            edges_.push_back({ed.u, ed.v, e.color});
        }
        std::sort(edges_.begin(), edges_.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
            return a.edge() < b.edge();
        });
        for (Vertex v = 0; v < n_; ++v) nbrs_[v] = adj_[v].to_vector();
    }

    ColoredGraph(std::size_t n, std::initializer_list<ColoredEdge> edges)
        : ColoredGraph(n, std::span<const ColoredEdge>(edges.begin(), edges.size())) {}

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    Color color(Vertex a, Vertex b) const { return color_[index(a, b)]; }
    bool adjacent(Vertex a, Vertex b) const { return color(a, b) != kNoColor; }

    const VertexSet& neighbor_set(Vertex v) const { return adj_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
    std::size_t degree(Vertex v) const { return nbrs_[v].size(); }

    // Distinct colors in ascending order.
    std::vector<Color> palette() const {
        std::vector<Color> out;
        for (const auto& e : edges_) out.push_back(e.color);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    SimpleGraph uncolored() const {
        SimpleGraph g(n_);
        for (const auto& e : edges_) g.add_edge(e.u, e.v);
        return g;
    }

    void check_vertex(Vertex v) const {
        if (v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range (n=" +
                             std::to_string(n_) + ")");
    }

    bool operator==(const ColoredGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    std::size_t index(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

    std::size_t n_ = 0;
    std::vector<ColoredEdge> edges_;
    std::vector<Color> color_;
    std::vector<VertexSet> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

// |{u in N(y) ∩ X : c(yu) = alpha}|, i.e. d_alpha(y, X).
inline std::size_t color_degree_into(const ColoredGraph& g, Vertex y, Color alpha,
                                     const VertexSet& within) {
    std::size_t count = 0;
    (g.neighbor_set(y) & within).for_each([&](Vertex u) {
        if (g.color(y, u) == alpha) ++count;
    });
    return count;
}

inline std::size_t color_degree(const ColoredGraph& g, Vertex v) {
    g.check_vertex(v);
    std::vector<Color> seen;
    seen.reserve(g.degree(v));
    for (auto u : g.neighbors(v)) seen.push_back(g.color(v, u));
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

struct ColorClass {
    Color color = kNoColor;
    std::vector<Vertex> members;  // N_alpha(v), ascending
};

// Per-vertex color statistics. Classes are ordered by size descending, ties
// by ascending color id, so classes[0] is the d_1(v) class.
struct ColorDegreeProfile {
    Vertex vertex = 0;
    std::size_t degree = 0;
    std::vector<ColorClass> classes;
    std::size_t dc = 0;
    std::size_t dmon = 0;
    std::vector<std::size_t> sorted_sizes;
    VertexSet unique_nbrs;  // N_!(v)

    std::size_t class_size(Color alpha) const {
        for (const auto& c : classes)
            if (c.color == alpha) return c.members.size();
        return 0;
    }
};

inline ColorDegreeProfile color_profile(const ColoredGraph& g, Vertex v) {
    g.check_vertex(v);
    ColorDegreeProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    p.unique_nbrs = VertexSet(g.order());

    std::map<Color, std::vector<Vertex>> by_color;
    for (auto u : g.neighbors(v)) by_color[g.color(v, u)].push_back(u);
    for (auto& [c, members] : by_color) p.classes.push_back({c, std::move(members)});
    std::stable_sort(p.classes.begin(), p.classes.end(),
                     [](const ColorClass& a, const ColorClass& b) {
                         return a.members.size() > b.members.size();
                     });

    p.dc = p.classes.size();
    for (const auto& c : p.classes) {
        p.sorted_sizes.push_back(c.members.size());
        if (c.members.size() == 1) p.unique_nbrs.insert(c.members.front());
    }
    p.dmon = p.sorted_sizes.empty() ? 0 : p.sorted_sizes.front();
    return p;
}

inline std::size_t monochromatic_degree(const ColoredGraph& g, Vertex v) {
    g.check_vertex(v);
    std::map<Color, std::size_t> counts;
    std::size_t best = 0;
    for (auto u : g.neighbors(v)) best = std::max(best, ++counts[g.color(v, u)]);
    return best;
}

inline std::size_t max_monochromatic_degree(const ColoredGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, monochromatic_degree(g, v));
    return best;
}

inline std::size_t min_color_degree(const ColoredGraph& g) {
    if (g.order() == 0) throw GraphError("minimum color degree of the empty graph");
    std::size_t best = color_degree(g, 0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, color_degree(g, v));
    return best;
}

inline std::size_t min_degree(const ColoredGraph& g) {
    if (g.order() == 0) throw GraphError("minimum degree of the empty graph");
    std::size_t best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

// Applies `relabel` to every color. The map must be injective on the palette
// for query results to be preserved.
inline ColoredGraph recolor(const ColoredGraph& g, const std::function<Color(Color)>& relabel) {
    std::vector<ColoredEdge> edges = g.edges();
    for (auto& e : edges) e.color = relabel(e.color);
    return ColoredGraph(g.order(), edges);
}

// Relabels colors to 1..|C(G)| preserving their relative order.
inline ColoredGraph normalize_colors(const ColoredGraph& g) {
    const auto pal = g.palette();
    return recolor(g, [&](Color c) {
        return static_cast<Color>(std::lower_bound(pal.begin(), pal.end(), c) - pal.begin() + 1);
    });
}

// Same edge set, every edge its own color (edge index + 1). Rainbow
// substructures of the result are exactly the ordinary substructures.
inline ColoredGraph injective_coloring(const SimpleGraph& g) {
    std::vector<ColoredEdge> edges;
    Color next = 1;
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, next++});
    return ColoredGraph(g.order(), edges);
}

}  // namespace rainbow
