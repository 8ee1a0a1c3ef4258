#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/simple_graph.hpp"
#include "rainbow/vertex_set.hpp"

namespace rainbow {

inline constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

struct Matching {
    std::vector<Vertex> mate;  // kUnmatched for exposed vertices

    bool saturates(Vertex v) const { return mate[v] != kUnmatched; }

    std::size_t size() const {
        std::size_t twice = 0;
        for (auto m : mate)
            if (m != kUnmatched) ++twice;
        return twice / 2;
    }

    // Matching edges ordered by smaller endpoint.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex v = 0; v < mate.size(); ++v)
            if (mate[v] != kUnmatched && v < mate[v]) out.push_back({v, mate[v]});
        return out;
    }
};

// Validates that `edges` is a matching of g.
inline Matching make_matching(const SimpleGraph& g, const std::vector<Edge>& edges) {
    Matching m{std::vector<Vertex>(g.order(), kUnmatched)};
    for (const auto& e : edges) {
        if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw GraphError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " is not an edge of the graph");
        if (m.saturates(e.u) || m.saturates(e.v))
            throw GraphError("edges share vertex; not a matching");
        m.mate[e.u] = e.v;
        m.mate[e.v] = e.u;
    }
    return m;
}

namespace detail {

// Edmonds' alternating forest with blossom contraction (Gabow's O(n^3)
// array formulation). Outer vertices are those reachable from a root by an
// even-length alternating path; vertices only ever reached at odd length keep
// a parent but are never marked outer.
class AlternatingForest {
public:
    static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

    AlternatingForest(const SimpleGraph& g, std::vector<Vertex>& mate)
        : g_(g), mate_(mate), n_(g.order()) {}

    // Grows trees from all `roots` at once. Returns the exposed endpoint of an
    // augmenting path (parent links lead back to its root) or kNone.
    Vertex grow(const std::vector<Vertex>& roots) {
        parent_.assign(n_, kNone);
        base_.resize(n_);
        for (Vertex i = 0; i < n_; ++i) base_[i] = i;
        outer_.assign(n_, false);
        root_.assign(n_, false);
        cross_tree_ = false;
        std::deque<Vertex> queue;
        for (auto r : roots) {
            outer_[r] = true;
            root_[r] = true;
            queue.push_back(r);
        }
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (const Vertex to : g_.neighbor_set(v).to_vector()) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (is_outer(to)) {
                    const Vertex cur = lca(v, to);
                    if (cur == kNone) {
                        // Two trees touch: an augmenting path exists.
                        cross_tree_ = true;
                        return kNone;
                    }
                    blossom_.assign(n_, false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (Vertex i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!outer_[i]) {
                                outer_[i] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (mate_[to] == kUnmatched) return to;
                    outer_[mate_[to]] = true;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return kNone;
    }

    bool found_cross_tree_edge() const { return cross_tree_; }
    bool outer(Vertex v) const { return outer_[v]; }
    bool reached(Vertex v) const { return outer_[v] || parent_[v] != kNone; }
    Vertex parent(Vertex v) const { return parent_[v]; }

private:
    bool is_outer(Vertex to) const {
        return root_[to] || (mate_[to] != kUnmatched && parent_[mate_[to]] != kNone);
    }

    Vertex lca(Vertex a, Vertex b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == kUnmatched) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            if (mate_[b] == kUnmatched) return kNone;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    const SimpleGraph& g_;
    std::vector<Vertex>& mate_;
    std::size_t n_;
    std::vector<Vertex> parent_, base_;
    std::vector<bool> outer_, root_, blossom_;
    bool cross_tree_ = false;
};

}  // namespace detail

// Maximum cardinality matching (Edmonds). Greedy start, then one augmenting
// search per exposed vertex.
inline Matching max_matching(const SimpleGraph& g) {
    const std::size_t n = g.order();
    Matching m{std::vector<Vertex>(n, kUnmatched)};
    for (Vertex v = 0; v < n; ++v) {
        if (m.saturates(v)) continue;
        g.neighbor_set(v).for_each([&](Vertex u) {
            if (!m.saturates(v) && !m.saturates(u)) {
                m.mate[v] = u;
                m.mate[u] = v;
            }
        });
    }
    detail::AlternatingForest forest(g, m.mate);
    for (Vertex root = 0; root < n; ++root) {
        if (m.saturates(root)) continue;
        Vertex v = forest.grow({root});
        while (v != detail::AlternatingForest::kNone) {
            const Vertex pv = forest.parent(v);
            const Vertex next = m.mate[pv];
            m.mate[v] = pv;
            m.mate[pv] = v;
            v = next;
        }
    }
    return m;
}

inline std::size_t matching_number(const SimpleGraph& g) { return max_matching(g).size(); }

struct VertexCover {
    std::vector<Vertex> vertices;
    std::size_t size() const { return vertices.size(); }
};

inline bool is_vertex_cover(const SimpleGraph& g, const std::vector<Vertex>& cover) {
    const auto in = VertexSet::of(g.order(), cover);
    for (const auto& e : g.edges())
        if (!in.contains(e.u) && !in.contains(e.v)) return false;
    return true;
}

namespace detail {

class CoverSearch {
public:
    explicit CoverSearch(const SimpleGraph& g) : g_(g), best_(VertexSet(g.order())) {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) > 0) best_.insert(v);
        best_size_ = best_.size();
    }

    void run() { branch(VertexSet::all(g_.order()), VertexSet(g_.order()), 0); }
    const VertexSet& best() const { return best_; }

private:
    std::size_t greedy_matching(const VertexSet& alive) const {
        VertexSet free = alive;
        std::size_t size = 0;
        alive.for_each([&](Vertex v) {
            if (!free.contains(v)) return;
            auto cand = g_.neighbor_set(v) & free;
            cand.for_each([&](Vertex u) {
                if (free.contains(v) && free.contains(u)) {
                    free.erase(v);
                    free.erase(u);
                    ++size;
                }
            });
        });
        return size;
    }

    // Vertices outside `alive` are decided; edges with both ends alive are
    // still uncovered.
    void branch(const VertexSet& alive, const VertexSet& cover, std::size_t cover_size) {
        Vertex pick = 0;
        std::size_t max_deg = 0;
        alive.for_each([&](Vertex v) {
            const auto d = g_.neighbor_set(v).intersection_size(alive);
            if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        });
        if (max_deg == 0) {
            if (cover_size < best_size_) {
                best_ = cover;
                best_size_ = cover_size;
            }
            return;
        }
        if (cover_size + greedy_matching(alive) >= best_size_) return;

        const auto nbrs = g_.neighbor_set(pick) & alive;
        {
            auto a = alive;
            a.erase(pick);
            auto c = cover;
            c.insert(pick);
            branch(a, c, cover_size + 1);
        }
        {
            auto a = alive - nbrs;
            a.erase(pick);
            branch(a, cover | nbrs, cover_size + nbrs.size());
        }
    }

    const SimpleGraph& g_;
    VertexSet best_;
    std::size_t best_size_ = 0;
};

}  // namespace detail

// Exact minimum vertex cover by branch and bound on a maximum-degree vertex
// (take it, or take all its neighbors), pruned by a greedy matching bound.
inline VertexCover min_vertex_cover(const SimpleGraph& g, std::size_t max_order = 160) {
    if (g.order() > max_order)
        throw std::length_error("min_vertex_cover: " + std::to_string(g.order()) +
                                " vertices exceeds exact-search limit " + std::to_string(max_order));
    detail::CoverSearch search(g);
    search.run();
    return {search.best().to_vector()};
}

inline std::size_t cover_number(const SimpleGraph& g) { return min_vertex_cover(g).size(); }

// Partition of V(G) induced by a maximum matching M. A virtual vertex x
// (id = order) is joined to every M-exposed vertex; alpha-edges are M plus
// those virtual edges, gamma-edges the rest of E(G). V_0 holds the
// gamma-vertices: those reachable from x by alternating paths, but only by
// paths ending in a gamma-edge. V_1..V_p are the components of G - V_0.
struct GallaiPartition {
    std::size_t order = 0;
    Matching matching;
    std::vector<Vertex> v0;
    std::vector<std::vector<Vertex>> components;
    std::vector<Edge> alpha_edges;
    std::vector<Vertex> virtual_neighbors;
    std::vector<Edge> gamma_edges;

    Vertex virtual_vertex() const { return static_cast<Vertex>(order); }
    std::size_t p() const { return components.size(); }
};

inline GallaiPartition gallai_partition(const SimpleGraph& g, const Matching& m) {
    const std::size_t n = g.order();
    if (m.mate.size() != n) throw GraphError("matching does not belong to this graph");
    for (Vertex v = 0; v < n; ++v)
        if (m.saturates(v) && (m.mate[v] >= n || m.mate[m.mate[v]] != v || !g.adjacent(v, m.mate[v])))
            throw GraphError("inconsistent matching at vertex " + std::to_string(v));
    if (n <= 2 * m.size())
        throw GraphError("partition undefined: n=" + std::to_string(n) + " <= 2|M|=" +
                         std::to_string(2 * m.size()));
    if (matching_number(g) != m.size()) throw GraphError("matching is not maximum");

    GallaiPartition part;
    part.order = n;
    part.matching = m;

    std::vector<Vertex> exposed;
    for (Vertex v = 0; v < n; ++v)
        if (!m.saturates(v)) exposed.push_back(v);

    // Trees rooted at the exposed vertices are exactly the alternating paths
    // leaving x through its virtual alpha-edges.
    auto mate = m.mate;
    detail::AlternatingForest forest(g, mate);
    forest.grow(exposed);
    if (forest.found_cross_tree_edge()) throw GraphError("matching is not maximum");

    VertexSet rest = VertexSet::all(n);
    for (Vertex v = 0; v < n; ++v)
        if (forest.reached(v) && !forest.outer(v)) {
            part.v0.push_back(v);
            rest.erase(v);
        }
    part.components = g.components(rest);
    part.alpha_edges = m.edges();
    part.virtual_neighbors = exposed;
    for (const auto& e : g.edges())
        if (m.mate[e.u] != e.v) part.gamma_edges.push_back(e);
    return part;
}

inline GallaiPartition gallai_partition(const SimpleGraph& g) {
    return gallai_partition(g, max_matching(g));
}

struct PartitionDiagnostics {
    std::size_t n = 0;
    std::size_t matching_number = 0;  // alpha'
    std::size_t cover_number = 0;     // beta
    std::size_t p = 0;
    std::size_t v0_size = 0;
    bool connected = false;

    bool eq3 = false;            // alpha' = |V_0| + sum floor(|V_i|/2)
    bool fact1 = false;          // alpha-edges at gamma-vertices land in odd V_i, one per odd V_i
    bool v0_saturated = false;
    bool cover_le_n_minus_p = false;       // beta <= n - p
    bool n_minus_p_le_bound = false;       // n - p <= 2 alpha' - |V_0|

    bool lemma6_applicable = false;        // n >= 2 alpha' + 2
    bool lemma6_cover_bound = true;        // beta <= 2 alpha' - 1
    bool lemma6_v0_nonempty = true;
    bool lemma6_equality_case = false;     // beta == 2 alpha' - 1
    bool lemma6_components_complete_odd = true;
    bool lemma6_cover_is_n_minus_p = true;
    bool lemma6_cover_construction_valid = true;

    bool identities_hold() const {
        return eq3 && fact1 && v0_saturated && cover_le_n_minus_p && n_minus_p_le_bound;
    }
    bool lemma6_holds() const {
        return lemma6_cover_bound && lemma6_v0_nonempty && lemma6_components_complete_odd &&
               lemma6_cover_is_n_minus_p && lemma6_cover_construction_valid;
    }
    bool all_hold() const { return identities_hold() && lemma6_holds(); }
};

inline PartitionDiagnostics verify_partition_lemmas(const SimpleGraph& g, const GallaiPartition& part,
                                                    std::size_t beta) {
    PartitionDiagnostics d;
    d.n = g.order();
    d.matching_number = part.matching.size();
    d.cover_number = beta;
    d.p = part.p();
    d.v0_size = part.v0.size();
    d.connected = g.is_connected();

    std::size_t floor_sum = 0;
    for (const auto& c : part.components) floor_sum += c.size() / 2;
    d.eq3 = d.matching_number == d.v0_size + floor_sum;

    d.v0_saturated = std::all_of(part.v0.begin(), part.v0.end(),
                                 [&](Vertex v) { return part.matching.saturates(v); });

    // Fact 1, with x counted among the gamma-vertices.
    std::vector<std::size_t> comp_of(d.n, SIZE_MAX);
    for (std::size_t i = 0; i < part.components.size(); ++i)
        for (auto v : part.components[i]) comp_of[v] = i;
    const auto in_v0 = VertexSet::of(d.n, part.v0);
    std::vector<std::size_t> hits(part.components.size(), 0);
    bool fact1 = true;
    auto land = [&](Vertex other) {
        const auto c = comp_of[other];
        if (c == SIZE_MAX || part.components[c].size() % 2 == 0) {
            fact1 = false;
            return;
        }
        ++hits[c];
    };
    for (const auto& e : part.alpha_edges) {
        const bool gu = in_v0.contains(e.u), gv = in_v0.contains(e.v);
        if (gu && gv) fact1 = false;
        else if (gu) land(e.v);
        else if (gv) land(e.u);
    }
    for (auto u : part.virtual_neighbors) land(u);
    for (std::size_t i = 0; i < part.components.size(); ++i)
        if (part.components[i].size() % 2 == 1 && hits[i] != 1) fact1 = false;
    d.fact1 = fact1;

    const std::size_t n_minus_p = d.n - d.p;
    d.cover_le_n_minus_p = beta <= n_minus_p;
    d.n_minus_p_le_bound = n_minus_p + d.v0_size <= 2 * d.matching_number;

    d.lemma6_applicable = d.n >= 2 * d.matching_number + 2;
    if (d.lemma6_applicable) {
        d.lemma6_cover_bound = beta + 1 <= 2 * d.matching_number;
        d.lemma6_v0_nonempty = d.v0_size > 0;
        d.lemma6_equality_case = beta + 1 == 2 * d.matching_number;
        if (d.lemma6_equality_case) {
            std::vector<Vertex> cover = part.v0;
            for (const auto& c : part.components) {
                const bool complete = g.induced(c).is_complete();
                if (!complete || c.size() % 2 == 0) d.lemma6_components_complete_odd = false;
                cover.insert(cover.end(), c.begin() + 1, c.end());
            }
            d.lemma6_cover_is_n_minus_p = beta == n_minus_p;
            d.lemma6_cover_construction_valid = cover.size() == beta && is_vertex_cover(g, cover);
        }
    }
    return d;
}

inline PartitionDiagnostics verify_partition_lemmas(const SimpleGraph& g, const GallaiPartition& part) {
    return verify_partition_lemmas(g, part, cover_number(g));
}

}  // namespace rainbow
