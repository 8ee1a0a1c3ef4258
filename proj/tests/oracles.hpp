#pragma once
// Slow reference implementations. Each one works from adjacency and color
// queries only, so it shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/simple_graph.hpp"

namespace oracle {

using rainbow::Color;
using rainbow::ColoredGraph;
using rainbow::SimpleGraph;
using rainbow::Vertex;
using Tri = std::array<Vertex, 3>;

inline bool rainbow3(const ColoredGraph& g, Vertex a, Vertex b, Vertex c) {
    if (!g.adjacent(a, b) || !g.adjacent(a, c) || !g.adjacent(b, c)) return false;
    const Color x = g.color(a, b), y = g.color(a, c), z = g.color(b, c);
    return x != y && x != z && y != z;
}

inline std::vector<Tri> rainbow_triangles(const ColoredGraph& g) {
    std::vector<Tri> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (rainbow3(g, a, b, c)) out.push_back({a, b, c});
    return out;
}

inline std::size_t color_degree(const ColoredGraph& g, Vertex v) {
    std::set<Color> seen;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && g.adjacent(u, v)) seen.insert(g.color(u, v));
    return seen.size();
}

// Maximum matching of the subgraph induced by `mask`, memoized over subsets.
class MatchingDp {
public:
    explicit MatchingDp(const SimpleGraph& g) : g_(g) {}

    std::size_t on(std::uint32_t mask) {
        if (mask == 0) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        const auto v = static_cast<Vertex>(__builtin_ctz(mask));
        const std::uint32_t rest = mask & ~(1u << v);
        std::size_t best = on(rest);
        for (Vertex u = 0; u < g_.order(); ++u)
            if ((rest >> u & 1u) && g_.adjacent(u, v)) best = std::max(best, 1 + on(rest & ~(1u << u)));
        memo_[mask] = best;
        return best;
    }
    std::size_t all() { return on(full()); }
    std::uint32_t full() const { return g_.order() == 32 ? ~0u : (1u << g_.order()) - 1; }

private:
    const SimpleGraph& g_;
    std::unordered_map<std::uint32_t, std::size_t> memo_;
};

inline std::size_t matching_number(const SimpleGraph& g) { return MatchingDp(g).all(); }

inline bool covers(const SimpleGraph& g, std::uint32_t mask) {
    for (const auto& e : g.edges())
        if (!(mask >> e.u & 1u) && !(mask >> e.v & 1u)) return false;
    return true;
}

inline std::size_t cover_number(const SimpleGraph& g) {
    const auto n = g.order();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) < best && covers(g, mask))
            best = static_cast<std::size_t>(__builtin_popcount(mask));
    return best;
}

inline std::size_t independence_number(const SimpleGraph& g) {
    const auto n = g.order();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
                ok = false;
                break;
            }
        if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
    return best;
}

// Every maximum matching, as sorted edge lists.
inline std::vector<std::vector<rainbow::Edge>> all_maximum_matchings(const SimpleGraph& g) {
    const auto target = matching_number(g);
    const auto edges = g.edges();
    std::vector<std::vector<rainbow::Edge>> out;
    std::vector<rainbow::Edge> cur;
    std::vector<bool> used(g.order(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (cur.size() == target) {
            out.push_back(cur);
            return;
        }
        if (i == edges.size() || cur.size() + (edges.size() - i) < target) return;
        const auto& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            cur.push_back(e);
            rec(i + 1);
            cur.pop_back();
            used[e.u] = used[e.v] = false;
        }
        rec(i + 1);
    };
    rec(0);
    return out;
}

// Gallai-Edmonds A-set: neighbors of D outside D, where D holds the vertices
// missed by some maximum matching (alpha'(G - v) = alpha'(G)).
inline std::vector<Vertex> gallai_edmonds_a(const SimpleGraph& g) {
    MatchingDp dp(g);
    const auto full = dp.full();
    const auto nu = dp.on(full);
    std::vector<bool> in_d(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) in_d[v] = dp.on(full & ~(1u << v)) == nu;
    std::vector<Vertex> a;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_d[v]) continue;
        for (Vertex u = 0; u < g.order(); ++u)
            if (in_d[u] && g.adjacent(u, v)) {
                a.push_back(v);
                break;
            }
    }
    return a;
}

// Largest number of rainbow triangles through v whose other vertices are all distinct.
inline std::size_t fan_at(const ColoredGraph& g, Vertex v) {
    std::vector<std::pair<Vertex, Vertex>> opp;
    for (const auto& t : rainbow_triangles(g)) {
        if (t[0] == v) opp.push_back({t[1], t[2]});
        else if (t[1] == v) opp.push_back({t[0], t[2]});
        else if (t[2] == v) opp.push_back({t[0], t[1]});
    }
    std::vector<bool> used(g.order(), false);
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
        if (i == opp.size()) return 0;
        std::size_t best = rec(i + 1);
        auto [x, y] = opp[i];
        if (!used[x] && !used[y]) {
            used[x] = used[y] = true;
            best = std::max(best, 1 + rec(i + 1));
            used[x] = used[y] = false;
        }
        return best;
    };
    return rec(0);
}

inline std::size_t disjoint_triangles(const ColoredGraph& g) {
    const auto tris = rainbow_triangles(g);
    std::vector<bool> used(g.order(), false);
    std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
        if (i == tris.size()) return 0;
        std::size_t best = rec(i + 1);
        const auto& t = tris[i];
        if (!used[t[0]] && !used[t[1]] && !used[t[2]]) {
            used[t[0]] = used[t[1]] = used[t[2]] = true;
            best = std::max(best, 1 + rec(i + 1));
            used[t[0]] = used[t[1]] = used[t[2]] = false;
        }
        return best;
    };
    return rec(0);
}

// Deletes the lexicographically first edge whose removal keeps both
// endpoint color degrees, rescanning from the start after each deletion.
inline ColoredGraph restart_scan_reduce(const ColoredGraph& g) {
    auto edges = g.edges();
    for (;;) {
        const ColoredGraph cur(g.order(), edges);
        bool removed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto trial = edges;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            const ColoredGraph h(g.order(), trial);
            if (oracle::color_degree(h, edges[i].u) == oracle::color_degree(cur, edges[i].u) &&
                oracle::color_degree(h, edges[i].v) == oracle::color_degree(cur, edges[i].v)) {
                edges = std::move(trial);
                removed = true;
                break;
            }
        }
        if (!removed) return ColoredGraph(g.order(), edges);
    }
}

}  // namespace oracle
