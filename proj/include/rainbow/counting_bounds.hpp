#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rainbow/colored_graph.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

using Rational = boost::rational<std::int64_t>;

// sigma_{v,X}(y): colors alpha = c(xy), x in X ∩ N(y), such that the path
// v-x-y has two distinct colors and alpha does not appear on any edge from y
// to N(y) \ X.
inline std::size_t restriction_count(const ColoredGraph& g, Vertex v, const VertexSet& X, Vertex y) {
    g.check_vertex(v);
    g.check_vertex(y);
    if (y == v) throw std::invalid_argument("restriction_count: y must differ from v");
    if (!X.is_subset_of(g.neighbor_set(v)))
        throw std::invalid_argument("restriction_count: X is not a subset of N(v)");

    std::set<Color> outside;  // C(y, N(y) \ X)
    (g.neighbor_set(y) - X).for_each([&](Vertex u) { outside.insert(g.color(y, u)); });

    std::set<Color> restricted;
    (X & g.neighbor_set(y)).for_each([&](Vertex x) {
        const Color alpha = g.color(x, y);
        if (g.color(v, x) != alpha && !outside.contains(alpha)) restricted.insert(alpha);
    });
    return restricted.size();
}

struct ColorClassBound {
    Color color = kNoColor;
    std::size_t d_i = 0;
    std::size_t rt_observed = 0;       // rt(v, N_i(v))
    std::int64_t lemma1_rhs = 0;
    std::int64_t lemma1_rhs_proof_form = 0;  // unique-neighbor sum over Y_i = N(v) \ N_i(v) only
    std::int64_t B_i = 0;

    std::int64_t slack() const { return static_cast<std::int64_t>(rt_observed) - lemma1_rhs; }
};

struct BoundReport {
    Vertex vertex = 0;
    bool edge_minimal = false;  // the per-class lower bounds are guaranteed only when true
    std::vector<ColorClassBound> per_color;  // classes in d_1 >= d_2 >= ... order
    std::int64_t B_total = 0;          // sum of B_i
    std::int64_t B_closed_form = 0;    // d(v) sum(d_j - 1) - sum d_i(d_i - 1) - unique term
    std::int64_t B_split_form = 0;     // (d - d_1)(d_1 - 1) - unique term + sum_{i>=2} (d - d_i)(d_i - 1)
    Rational corollary1_lower;
    std::size_t rt_vertex = 0;

    bool lemma1_holds() const {
        for (const auto& c : per_color)
            if (c.slack() < 0) return false;
        return true;
    }
    bool corollary1_holds() const { return Rational(static_cast<std::int64_t>(rt_vertex)) >= corollary1_lower; }
    bool b_forms_agree() const { return B_total == B_closed_form && B_total == B_split_form; }
};

inline BoundReport bound_report(const ColoredGraph& g, const RainbowTriangleIndex& idx, Vertex v,
                                bool edge_minimal) {
    const auto prof = color_profile(g, v);
    const auto n = static_cast<std::int64_t>(g.order());
    const auto d = static_cast<std::int64_t>(prof.degree);
    const auto dcv = static_cast<std::int64_t>(prof.dc);
    const std::int64_t excess = d - dcv;  // sum_j (d_j - 1)

    std::vector<std::int64_t> dcx(g.order());
    for (Vertex x = 0; x < g.order(); ++x) dcx[x] = static_cast<std::int64_t>(color_degree(g, x));

    const auto unique = prof.unique_nbrs.to_vector();
    auto unique_term = [&](const VertexSet& into, const VertexSet* skip) {
        std::int64_t total = 0;
        for (auto y : unique) {
            if (skip != nullptr && skip->contains(y)) continue;
            total += static_cast<std::int64_t>(color_degree_into(g, y, g.color(v, y), into));
        }
        return total;
    };

    BoundReport r;
    r.vertex = v;
    r.edge_minimal = edge_minimal;
    r.rt_vertex = idx.rt(v);

    for (const auto& cls : prof.classes) {
        const auto Xi = VertexSet::of(g.order(), cls.members);
        const auto di = static_cast<std::int64_t>(cls.members.size());
        std::int64_t degree_term = 0;
        for (auto x : cls.members) degree_term += dcx[x] + dcv - n;

        ColorClassBound b;
        b.color = cls.color;
        b.d_i = cls.members.size();
        b.rt_observed = idx.rt(v, std::span<const Vertex>(cls.members));
        b.B_i = di * excess - di * (di - 1) - unique_term(Xi, nullptr);
        b.lemma1_rhs = degree_term + b.B_i;
        b.lemma1_rhs_proof_form =
            degree_term + di * excess - di * (di - 1) - unique_term(Xi, &Xi);
        r.B_total += b.B_i;
        r.per_color.push_back(b);
    }

    const std::int64_t unique_all = unique_term(g.neighbor_set(v), nullptr);
    std::int64_t sq = 0, tail = 0;
    for (std::size_t i = 0; i < prof.sorted_sizes.size(); ++i) {
        const auto di = static_cast<std::int64_t>(prof.sorted_sizes[i]);
        sq += di * (di - 1);
        if (i > 0) tail += (d - di) * (di - 1);
    }
    r.B_closed_form = d * excess - sq - unique_all;
    if (prof.sorted_sizes.empty()) {
        r.B_split_form = -unique_all;
    } else {
        const auto d1 = static_cast<std::int64_t>(prof.sorted_sizes.front());
        r.B_split_form = (d - d1) * (d1 - 1) - unique_all + tail;
    }

    std::int64_t degree_all = 0;
    for (auto x : g.neighbors(v)) degree_all += dcx[x] + dcv - n;
    r.corollary1_lower = Rational(degree_all + r.B_closed_form, 2);
    return r;
}

inline BoundReport bound_report(const ColoredGraph& g, Vertex v) {
    g.check_vertex(v);
    return bound_report(g, build_index(g), v, is_edge_minimal(g).minimal);
}

struct Lemma2Diagnostics {
    Vertex vertex = 0;
    std::size_t max_mono = 0;  // Delta^mon(G) = d^mon(v)
    std::int64_t B = 0;
    std::int64_t B_1 = 0;
    bool b_nonnegative = false;
    bool equality_case = false;   // Delta^mon >= 2 and B(v) = 0
    bool cond_a = true;           // N_!(v) = N(v) \ N_1(v)
    bool cond_b = true;           // d^mon(u) = Delta^mon for u in N_!(v)
    bool cond_c_applicable = false;  // equality case, B_1(v) = 0, G edge-minimal
    bool cond_c = true;           // E[N_1(v), N_!(v)] ⊆ RE(v)

    bool passed() const { return b_nonnegative && cond_a && cond_b && cond_c; }
};

inline Lemma2Diagnostics lemma2_check(const ColoredGraph& g, const RainbowTriangleIndex& idx, Vertex v,
                                      bool edge_minimal) {
    g.check_vertex(v);
    const auto delta_mon = max_monochromatic_degree(g);
    if (monochromatic_degree(g, v) != delta_mon)
        throw std::invalid_argument("lemma2_check: vertex " + std::to_string(v) +
                                    " does not attain the maximum monochromatic degree");
    const auto report = bound_report(g, idx, v, edge_minimal);
    const auto prof = color_profile(g, v);

    Lemma2Diagnostics diag;
    diag.vertex = v;
    diag.max_mono = delta_mon;
    diag.B = report.B_total;
    diag.B_1 = report.per_color.empty() ? 0 : report.per_color.front().B_i;
    diag.b_nonnegative = diag.B >= 0;
    diag.equality_case = delta_mon >= 2 && diag.B == 0;
    if (!diag.equality_case) return diag;

    const auto& n1 = prof.classes.front().members;
    const auto n1_set = VertexSet::of(g.order(), n1);
    diag.cond_a = prof.unique_nbrs == (g.neighbor_set(v) - n1_set);
    prof.unique_nbrs.for_each([&](Vertex u) {
        if (monochromatic_degree(g, u) != delta_mon) diag.cond_b = false;
    });

    diag.cond_c_applicable = diag.B_1 == 0 && edge_minimal;
    if (diag.cond_c_applicable) {
        for (auto x : n1)
            (g.neighbor_set(x) & prof.unique_nbrs).for_each([&](Vertex y) {
                if (!is_rainbow_triangle(g, v, x, y)) diag.cond_c = false;
            });
    }
    return diag;
}

inline Lemma2Diagnostics lemma2_check(const ColoredGraph& g, Vertex v) {
    return lemma2_check(g, build_index(g), v, is_edge_minimal(g).minimal);
}

// (1/6) delta^c (2 delta^c - n) n; nonpositive values make the bound vacuous.
inline Rational lnsz_lower(const ColoredGraph& g) {
    const auto n = static_cast<std::int64_t>(g.order());
    const auto dc = static_cast<std::int64_t>(min_color_degree(g));
    return Rational(dc * (2 * dc - n) * n, 6);
}

}  // namespace rainbow
