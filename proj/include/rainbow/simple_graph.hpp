#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/vertex_set.hpp"

namespace rainbow {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool touches(Vertex w) const { return w == u || w == v; }

    auto operator<=>(const Edge&) const = default;
};

// Uncolored simple graph on vertices 0..n-1 with bitset adjacency.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

    SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
        for (const auto& e : edges) add_edge(e.u, e.v);
    }

    std::size_t order() const { return n_; }

    std::size_t size() const {
        std::size_t twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    void add_edge(Vertex a, Vertex b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
        adj_[a].insert(b);
        adj_[b].insert(a);
    }

    bool adjacent(Vertex a, Vertex b) const { return adj_[a].contains(b); }
    const VertexSet& neighbor_set(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            adj_[u].for_each([&](Vertex w) {
                if (u < w) out.push_back({u, w});
            });
        return out;
    }

    bool is_complete() const {
        for (Vertex v = 0; v < n_; ++v)
            if (adj_[v].size() + 1 != n_) return false;
        return true;
    }

    // Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending order.
    SimpleGraph induced(const std::vector<Vertex>& keep) const {
        SimpleGraph h(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent(keep[i], keep[j]))
                    h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return h;
    }

    // Connected components of the subgraph induced by `alive`, each sorted,
    // ordered by smallest member.
    std::vector<std::vector<Vertex>> components(const VertexSet& alive) const {
        std::vector<std::vector<Vertex>> out;
        VertexSet seen(n_);
        for (Vertex s = 0; s < n_; ++s) {
            if (!alive.contains(s) || seen.contains(s)) continue;
            std::vector<Vertex> comp{s};
            seen.insert(s);
            for (std::size_t head = 0; head < comp.size(); ++head) {
                auto next = adj_[comp[head]] & alive;
                next -= seen;
                next.for_each([&](Vertex w) {
                    seen.insert(w);
                    comp.push_back(w);
                });
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::vector<std::vector<Vertex>> components() const {
        return components(VertexSet::all(n_));
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(Vertex v) const {
        if (v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range (n=" +
                             std::to_string(n_) + ")");
    }

    std::size_t n_ = 0;
    std::vector<VertexSet> adj_;
};

}  // namespace rainbow
