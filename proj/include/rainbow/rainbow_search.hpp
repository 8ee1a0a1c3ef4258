#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/matching_cover.hpp"

namespace rainbow {

using Triangle = std::array<Vertex, 3>;  // ascending

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline bool is_rainbow_triangle(const ColoredGraph& g, Vertex a, Vertex b, Vertex c) {
    const Color ab = g.color(a, b), bc = g.color(b, c), ca = g.color(c, a);
    return ab != kNoColor && bc != kNoColor && ca != kNoColor && ab != bc && bc != ca && ca != ab;
}

// Properly colored triangle v x y: the two edges at x differ and the two
// edges at y differ. The two edges at v may share a color.
inline bool is_proper_fan_triangle(const ColoredGraph& g, Vertex v, Vertex x, Vertex y) {
    const Color vx = g.color(v, x), xy = g.color(x, y), vy = g.color(v, y);
    return vx != kNoColor && xy != kNoColor && vy != kNoColor && vx != xy && xy != vy;
}

// All rainbow triangles of a graph with per-vertex and per-edge counts.
class RainbowTriangleIndex {
public:
    explicit RainbowTriangleIndex(const ColoredGraph& g)
        : n_(g.order()), per_vertex_(n_, 0), per_pair_(n_ * n_, 0) {
        for (const auto& e : g.edges()) {
            auto common = g.neighbor_set(e.u) & g.neighbor_set(e.v);
            common.for_each([&](Vertex w) {
                if (w <= e.v) return;
                if (!is_rainbow_triangle(g, e.u, e.v, w)) return;
                triangles_.push_back({e.u, e.v, w});
                for (auto x : {e.u, e.v, w}) ++per_vertex_[x];
                bump(e.u, e.v);
                bump(e.u, w);
                bump(e.v, w);
            });
        }
    }

    const std::vector<Triangle>& triangles() const { return triangles_; }
    std::size_t count() const { return triangles_.size(); }

    std::size_t rt(Vertex v) const { return per_vertex_[v]; }
    std::size_t rt(Vertex u, Vertex v) const { return per_pair_[u * n_ + v]; }
    std::size_t rt(Vertex v, const VertexSet& xs) const {
        std::size_t total = 0;
        xs.for_each([&](Vertex x) { total += rt(v, x); });
        return total;
    }
    std::size_t rt(Vertex v, std::span<const Vertex> xs) const {
        std::size_t total = 0;
        for (auto x : xs) total += rt(v, x);
        return total;
    }

private:
    void bump(Vertex a, Vertex b) {
        ++per_pair_[a * n_ + b];
        ++per_pair_[b * n_ + a];
    }

    std::size_t n_;
    std::vector<Triangle> triangles_;
    std::vector<std::size_t> per_vertex_;
    std::vector<std::uint32_t> per_pair_;
};

inline RainbowTriangleIndex build_index(const ColoredGraph& g) { return RainbowTriangleIndex(g); }

// RE(v): edges xy such that v x y is a rainbow triangle; G_tri(v) is the
// graph these edges span.
struct RainbowEdgeGraph {
    Vertex center = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    // The edges on the host's full vertex set (isolated vertices included).
    SimpleGraph on_host(std::size_t n) const { return SimpleGraph(n, edges); }

    // The edges on `vertices` only, relabelled to 0..|vertices|-1.
    SimpleGraph compact() const {
        SimpleGraph h(vertices.size());
        auto pos = [&](Vertex x) {
            return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), x) -
                                       vertices.begin());
        };
        for (const auto& e : edges) h.add_edge(pos(e.u), pos(e.v));
        return h;
    }
};

inline RainbowEdgeGraph rainbow_edge_graph(const ColoredGraph& g, Vertex v) {
    g.check_vertex(v);
    RainbowEdgeGraph out;
    out.center = v;
    VertexSet touched(g.order());
    const auto& nv = g.neighbor_set(v);
    for (auto x : g.neighbors(v)) {
        auto ys = g.neighbor_set(x) & nv;
        ys.for_each([&](Vertex y) {
            if (y <= x || !is_rainbow_triangle(g, v, x, y)) return;
            out.edges.push_back({x, y});
            touched.insert(x);
            touched.insert(y);
        });
    }
    out.vertices = touched.to_vector();
    return out;
}

enum class CertificateKind { book, fan, disjoint_family, spanning_fan };

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::book: return "book";
        case CertificateKind::fan: return "fan";
        case CertificateKind::disjoint_family: return "disjoint_family";
        case CertificateKind::spanning_fan: return "spanning_fan";
    }
    return "?";
}

// Witness for a search. `base` is the shared edge {u, v} for a book, the
// center for fans, and empty for a disjoint family.
struct Certificate {
    CertificateKind kind = CertificateKind::book;
    std::vector<Vertex> base;
    std::vector<Triangle> triangles;

    std::vector<Vertex> apexes() const {
        std::vector<Vertex> out;
        if (kind != CertificateKind::book || base.size() != 2) return out;
        for (const auto& t : triangles)
            for (auto x : t)
                if (x != base[0] && x != base[1]) out.push_back(x);
        return out;
    }
};

// nullopt if the certificate is sound for g, otherwise what is wrong.
inline std::optional<std::string> certificate_defect(const ColoredGraph& g, const Certificate& c) {
    const auto n = g.order();
    for (const auto& t : c.triangles)
        for (auto x : t)
            if (x >= n) return "triangle vertex out of range";
    for (auto b : c.base)
        if (b >= n) return "base vertex out of range";

    auto has = [](const Triangle& t, Vertex x) { return t[0] == x || t[1] == x || t[2] == x; };
    auto others = [&](const Triangle& t, Vertex center) {
        std::array<Vertex, 2> o{};
        std::size_t i = 0;
        for (auto x : t)
            if (x != center) o[i++] = x;
        return o;
    };

    switch (c.kind) {
        case CertificateKind::book: {
            if (c.base.size() != 2 || !g.adjacent(c.base[0], c.base[1])) return "book base is not an edge";
            VertexSet apex(n);
            for (const auto& t : c.triangles) {
                if (!is_rainbow_triangle(g, t[0], t[1], t[2])) return "triangle is not rainbow";
                if (!has(t, c.base[0]) || !has(t, c.base[1])) return "triangle misses the base edge";
                for (auto x : t)
                    if (x != c.base[0] && x != c.base[1]) {
                        if (apex.contains(x)) return "repeated apex";
                        apex.insert(x);
                    }
            }
            return std::nullopt;
        }
        case CertificateKind::fan:
        case CertificateKind::spanning_fan: {
            if (c.base.size() != 1) return "fan needs exactly one center";
            const Vertex v = c.base[0];
            VertexSet used(n);
            for (const auto& t : c.triangles) {
                if (!has(t, v)) return "triangle misses the center";
                const auto [x, y] = others(t, v);
                if (c.kind == CertificateKind::fan) {
                    if (!is_rainbow_triangle(g, t[0], t[1], t[2])) return "triangle is not rainbow";
                } else if (!is_proper_fan_triangle(g, v, x, y)) {
                    return "triangle is not properly colored";
                }
                if (used.contains(x) || used.contains(y)) return "opposite edges are not disjoint";
                used.insert(x);
                used.insert(y);
            }
            if (c.kind == CertificateKind::spanning_fan && used.size() + 1 != n)
                return "fan does not span the graph";
            return std::nullopt;
        }
        case CertificateKind::disjoint_family: {
            VertexSet used(n);
            for (const auto& t : c.triangles) {
                if (!is_rainbow_triangle(g, t[0], t[1], t[2])) return "triangle is not rainbow";
                for (auto x : t) {
                    if (used.contains(x)) return "triangles share a vertex";
                    used.insert(x);
                }
            }
            return std::nullopt;
        }
    }
    return "unknown certificate kind";
}

inline bool check_certificate(const ColoredGraph& g, const Certificate& c) {
    return !certificate_defect(g, c).has_value();
}

inline std::size_t max_book(const ColoredGraph& g, const RainbowTriangleIndex& idx) {
    std::size_t best = 0;
    for (const auto& e : g.edges()) best = std::max(best, idx.rt(e.u, e.v));
    return best;
}

inline std::size_t max_book(const ColoredGraph& g) { return max_book(g, build_index(g)); }

// First edge in lexicographic order carrying at least k rainbow triangles;
// apexes are its k smallest.
inline std::optional<Certificate> find_book(const ColoredGraph& g, const RainbowTriangleIndex& idx,
                                            std::size_t k) {
    if (k < 1) throw std::invalid_argument("find_book: k must be >= 1");
    for (const auto& e : g.edges()) {
        if (idx.rt(e.u, e.v) < k) continue;
        Certificate c{CertificateKind::book, {e.u, e.v}, {}};
        for (auto w : (g.neighbor_set(e.u) & g.neighbor_set(e.v)).to_vector()) {
            if (c.triangles.size() == k) break;
            if (is_rainbow_triangle(g, e.u, e.v, w)) c.triangles.push_back(make_triangle(e.u, e.v, w));
        }
        return c;
    }
    return std::nullopt;
}

inline std::optional<Certificate> find_book(const ColoredGraph& g, std::size_t k) {
    return find_book(g, build_index(g), k);
}

// Largest rainbow fan centered at v: a maximum matching of G_tri(v).
inline Matching fan_matching_at(const ColoredGraph& g, Vertex v) {
    return max_matching(rainbow_edge_graph(g, v).on_host(g.order()));
}

inline std::size_t fan_size_at(const ColoredGraph& g, Vertex v) { return fan_matching_at(g, v).size(); }

inline std::size_t max_fan(const ColoredGraph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, fan_size_at(g, v));
    return best;
}

inline std::optional<Certificate> find_fan(const ColoredGraph& g, std::size_t k) {
    if (k < 1) throw std::invalid_argument("find_fan: k must be >= 1");
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto m = fan_matching_at(g, v);
        if (m.size() < k) continue;
        Certificate c{CertificateKind::fan, {v}, {}};
        const auto edges = m.edges();
        for (std::size_t i = 0; i < k; ++i) c.triangles.push_back(make_triangle(v, edges[i].u, edges[i].v));
        return c;
    }
    return std::nullopt;
}

namespace detail {

class DisjointTriangleSearch {
public:
    DisjointTriangleSearch(const std::vector<Triangle>& tris, std::size_t n, std::size_t k)
        : tris_(tris), n_(n), k_(k), used_(n) {}

    bool run() { return extend(0); }
    const std::vector<Triangle>& chosen() const { return chosen_; }

private:
    bool extend(std::size_t from) {
        if (chosen_.size() == k_) return true;
        const std::size_t need = k_ - chosen_.size();
        if (n_ - used_.size() < 3 * need) return false;
        if (tris_.size() - from < need) return false;
        for (std::size_t i = from; i < tris_.size(); ++i) {
            if (tris_.size() - i < need) return false;
            const auto& t = tris_[i];
            if (used_.contains(t[0]) || used_.contains(t[1]) || used_.contains(t[2])) continue;
            for (auto x : t) used_.insert(x);
            chosen_.push_back(t);
            if (extend(i + 1)) return true;
            chosen_.pop_back();
            for (auto x : t) used_.erase(x);
        }
        return false;
    }

    const std::vector<Triangle>& tris_;
    std::size_t n_, k_;
    VertexSet used_;
    std::vector<Triangle> chosen_;
};

}  // namespace detail

// Exact backtracking over the lexicographically ordered rainbow triangles.
inline std::optional<Certificate> find_disjoint_rainbow_triangles(const ColoredGraph& g,
                                                                  const RainbowTriangleIndex& idx,
                                                                  std::size_t k) {
    if (k < 1) throw std::invalid_argument("find_disjoint_rainbow_triangles: k must be >= 1");
    detail::DisjointTriangleSearch search(idx.triangles(), g.order(), k);
    if (!search.run()) return std::nullopt;
    return Certificate{CertificateKind::disjoint_family, {}, search.chosen()};
}

inline std::optional<Certificate> find_disjoint_rainbow_triangles(const ColoredGraph& g, std::size_t k) {
    return find_disjoint_rainbow_triangles(g, build_index(g), k);
}

namespace detail {

inline bool pair_up(const ColoredGraph& g, Vertex center, VertexSet& left, std::vector<Triangle>& out) {
    if (left.empty()) return true;
    const Vertex x = left.front();
    left.erase(x);
    for (auto y : (g.neighbor_set(x) & left).to_vector()) {
        if (!is_proper_fan_triangle(g, center, x, y)) continue;
        left.erase(y);
        out.push_back(make_triangle(center, x, y));
        if (pair_up(g, center, left, out)) return true;
        out.pop_back();
        left.insert(y);
    }
    left.insert(x);
    return false;
}

}  // namespace detail

// Properly colored F_{(n-1)/2}: a center v and a perfect matching of V - v
// whose edges close properly colored triangles with v.
inline std::optional<Certificate> find_pc_spanning_fan(const ColoredGraph& g) {
    const auto n = g.order();
    if (n % 2 == 0) throw std::invalid_argument("find_pc_spanning_fan: n must be odd");
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) + 1 != n) continue;
        auto left = VertexSet::all(n);
        left.erase(v);
        std::vector<Triangle> tris;
        if (detail::pair_up(g, v, left, tris)) return Certificate{CertificateKind::spanning_fan, {v}, tris};
    }
    return std::nullopt;
}

}  // namespace rainbow
