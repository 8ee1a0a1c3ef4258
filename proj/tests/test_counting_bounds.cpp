#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rainbow/counting_bounds.hpp"
#include "rainbow/ecg_io.hpp"

using namespace rainbow;

namespace {

// Restriction colors straight from the definition, one candidate color at a time.
std::size_t sigma_by_definition(const ColoredGraph& g, Vertex v, const std::vector<bool>& in_x, Vertex y) {
    std::set<Color> candidates;
    for (const auto& e : g.edges()) candidates.insert(e.color);
    std::size_t count = 0;
    for (Color alpha : candidates) {
        bool via_x = false, outside = false;
        for (Vertex u = 0; u < g.order(); ++u) {
            if (u == y || !g.adjacent(u, y) || g.color(u, y) != alpha) continue;
            if (in_x[u]) {
                if (g.color(v, u) != alpha) via_x = true;
            } else {
                outside = true;
            }
        }
        count += via_x && !outside;
    }
    return count;
}

struct RawClass {
    Color color;
    std::vector<Vertex> members;
};

// Color classes at v sorted by size desc then color asc, from raw queries.
std::vector<RawClass> raw_classes(const ColoredGraph& g, Vertex v) {
    std::map<Color, std::vector<Vertex>> by;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && g.adjacent(u, v)) by[g.color(u, v)].push_back(u);
    std::vector<RawClass> out;
    for (auto& [c, m] : by) out.push_back({c, m});
    std::stable_sort(out.begin(), out.end(),
                     [](const RawClass& a, const RawClass& b) { return a.members.size() > b.members.size(); });
    return out;
}

// B_i(v) recomputed from raw adjacency and colors.
std::vector<std::int64_t> raw_b(const ColoredGraph& g, Vertex v) {
    const auto classes = raw_classes(g, v);
    std::int64_t excess = 0;
    for (const auto& c : classes) excess += static_cast<std::int64_t>(c.members.size()) - 1;
    std::vector<std::int64_t> out;
    for (const auto& ci : classes) {
        const auto di = static_cast<std::int64_t>(ci.members.size());
        std::int64_t uniq = 0;
        for (const auto& cy : classes) {
            if (cy.members.size() != 1) continue;
            const Vertex y = cy.members[0];
            for (auto x : ci.members)
                if (x != y && g.adjacent(x, y) && g.color(x, y) == cy.color) ++uniq;
        }
        out.push_back(di * excess - di * (di - 1) - uniq);
    }
    return out;
}

}  // namespace

TEST(RestrictionCount, Examples) {
    const auto k3 = fx::rainbow_k3();
    EXPECT_EQ(restriction_count(k3, 0, VertexSet::of(3, std::vector<Vertex>{1}), 2), 1u);

    ColoredGraph same(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 1}});
    EXPECT_EQ(restriction_count(same, 0, VertexSet::of(3, std::vector<Vertex>{1}), 2), 0u);

    ColoredGraph p3(3, {{0, 1, 1}, {1, 2, 2}});
    EXPECT_EQ(restriction_count(p3, 0, VertexSet::of(3, std::vector<Vertex>{1}), 2), 1u);
}

TEST(RestrictionCount, Errors) {
    const auto k3 = fx::rainbow_k3();
    const auto x = VertexSet::of(3, std::vector<Vertex>{1});
    EXPECT_THROW(restriction_count(k3, 0, x, 0), std::invalid_argument);
    EXPECT_THROW(restriction_count(k3, 0, x, 3), GraphError);
    ColoredGraph p3(3, {{0, 1, 1}, {1, 2, 2}});
    EXPECT_THROW(restriction_count(p3, 0, VertexSet::of(3, std::vector<Vertex>{2}), 1), std::invalid_argument);
}

TEST(RestrictionCountProperty, MatchesDefinition) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = gen_random_colored(8, 0.6, 1 + seed % 5, seed);
        Rng rng(seed);
        for (Vertex v = 0; v < 8; ++v) {
            std::vector<bool> in_x(8, false);
            VertexSet x(8);
            for (auto u : g.neighbors(v))
                if (rng() & 1u) in_x[u] = true, x.insert(u);
            for (Vertex y = 0; y < 8; ++y)
                if (y != v) { ASSERT_EQ(restriction_count(g, v, x, y), sigma_by_definition(g, v, in_x, y)); }
        }
    }
}

TEST(RestrictionCountProperty, LowerBoundsRainbowTrianglesOnEdge) {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        Rng rng(seed);
        const auto n = 3 + uniform_below(rng, 10);
        const auto g = gen_random_colored(n, unit_real(rng), static_cast<Color>(1 + uniform_below(rng, 8)), seed);
        const auto tris = oracle::rainbow_triangles(g);
        for (const auto& e : g.edges())
            for (auto [v, x] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                auto X = g.neighbor_set(v);
                for (auto w : g.neighbors(v))
                    if (g.color(v, w) == e.color) X.erase(w);
                std::size_t rt = 0;
                for (const auto& t : tris)
                    rt += (t[0] == v || t[1] == v || t[2] == v) && (t[0] == x || t[1] == x || t[2] == x);
                ASSERT_GE(rt, restriction_count(g, v, X, x));
            }
    }
}

TEST(BoundReport, RainbowTriangle) {
    const auto r = bound_report(fx::rainbow_k3(), 0);
    ASSERT_EQ(r.per_color.size(), 2u);
    for (const auto& c : r.per_color) {
        EXPECT_EQ(c.d_i, 1u);
        EXPECT_EQ(c.B_i, 0);
    }
    EXPECT_EQ(r.B_total, 0);
    EXPECT_EQ(r.corollary1_lower, Rational(1));
    EXPECT_EQ(r.rt_vertex, 1u);
    EXPECT_TRUE(r.edge_minimal);
    EXPECT_TRUE(r.lemma1_holds());
    EXPECT_TRUE(r.corollary1_holds());
}

TEST(BoundReport, ProperColoringGivesZeroB) {
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        for (const auto& g : {gen_proper_complete(7, seed), gen_random_proper_complete(8, seed), gen_example1(4)})
            for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(bound_report(g, v).B_total, 0);
}

// Deleting a leaf edge drops that leaf's color degree, so the star is edge-minimal.
TEST(BoundReport, MonochromaticStar) {
    ColoredGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    EXPECT_TRUE(is_edge_minimal(star).minimal);
    const auto r = bound_report(star, 0);
    ASSERT_EQ(r.per_color.size(), 1u);
    EXPECT_EQ(r.per_color[0].d_i, 3u);
    EXPECT_EQ(r.per_color[0].B_i, 0);
    EXPECT_EQ(r.per_color[0].lemma1_rhs, 3 * (1 + 1 - 4));
    EXPECT_EQ(r.rt_vertex, 0u);
    EXPECT_TRUE(r.edge_minimal);
    EXPECT_TRUE(r.lemma1_holds());
}

TEST(BoundReport, FlagsNonMinimalInput) {
    EXPECT_FALSE(bound_report(fx::mono_k3(), 0).edge_minimal);
    EXPECT_THROW(bound_report(fx::mono_k3(), 5), GraphError);
}

TEST(BoundReportProperty, BFormsAndRawRecomputation) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Rng rng(seed);
        const auto n = 2 + uniform_below(rng, 10);
        const auto g = gen_random_colored(n, unit_real(rng), static_cast<Color>(1 + uniform_below(rng, 6)), seed);
        for (Vertex v = 0; v < n; ++v) {
            const auto r = bound_report(g, v);
            ASSERT_TRUE(r.b_forms_agree());
            const auto raw = raw_b(g, v);
            ASSERT_EQ(raw.size(), r.per_color.size());
            std::int64_t total = 0;
            for (std::size_t i = 0; i < raw.size(); ++i) {
                EXPECT_EQ(r.per_color[i].B_i, raw[i]);
                total += raw[i];
            }
            EXPECT_EQ(r.B_total, total);
            for (const auto& c : r.per_color) EXPECT_EQ(c.lemma1_rhs, c.lemma1_rhs_proof_form);
        }
    }
}

TEST(BoundReportProperty, HoldsOnReducedGraphs) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        const auto n = 3 + uniform_below(rng, 10);
        const auto g = edge_minimal_reduce(
            gen_random_colored(n, 0.3 + 0.7 * unit_real(rng), static_cast<Color>(1 + uniform_below(rng, 8)), seed));
        const auto tris = oracle::rainbow_triangles(g);
        for (Vertex v = 0; v < n; ++v) {
            const auto r = bound_report(g, v);
            ASSERT_TRUE(r.edge_minimal);
            ASSERT_TRUE(r.lemma1_holds()) << save_ecg(g) << "v=" << v;
            ASSERT_TRUE(r.corollary1_holds()) << save_ecg(g) << "v=" << v;
            std::size_t rt = 0;
            for (const auto& t : tris) rt += t[0] == v || t[1] == v || t[2] == v;
            ASSERT_EQ(r.rt_vertex, rt);
        }
    }
}

TEST(Lemma2Check, ProperK4NotEqualityCase) {
    for (Vertex v = 0; v < 4; ++v) {
        const auto d = lemma2_check(fx::proper_k4(), v);
        EXPECT_EQ(d.max_mono, 1u);
        EXPECT_EQ(d.B, 0);
        EXPECT_FALSE(d.equality_case);
        EXPECT_TRUE(d.passed());
    }
}

TEST(Lemma2Check, PreconditionChecked) {
    ColoredGraph g(4, {{0, 1, 1}, {0, 2, 1}, {2, 3, 2}});
    EXPECT_THROW(lemma2_check(g, 3), std::invalid_argument);
    EXPECT_NO_THROW(lemma2_check(g, 0));
}

// Searches reduced random graphs for equality instances and re-checks
// conditions (a), (b), (c) by direct scan.
TEST(Lemma2CheckProperty, EqualityInstancesSatisfyConditions) {
    std::size_t equality_seen = 0, cond_c_seen = 0;
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        Rng rng(seed);
        const auto n = 4 + uniform_below(rng, 7);
        const auto g = edge_minimal_reduce(gen_random_colored(n, 0.5 + 0.5 * unit_real(rng), 2 + seed % 4, seed));
        const auto delta = max_monochromatic_degree(g);
        for (Vertex v = 0; v < n; ++v) {
            if (monochromatic_degree(g, v) != delta) continue;
            const auto d = lemma2_check(g, v);
            ASSERT_GE(d.B, 0);
            if (!d.equality_case) continue;
            ++equality_seen;
            const auto classes = raw_classes(g, v);
            std::set<Vertex> unique, outside_first;
            for (const auto& c : classes)
                if (c.members.size() == 1) unique.insert(c.members[0]);
            for (std::size_t i = 1; i < classes.size(); ++i)
                for (auto u : classes[i].members) outside_first.insert(u);
            EXPECT_EQ(unique, outside_first);
            EXPECT_TRUE(d.cond_a);
            for (auto u : unique) EXPECT_EQ(monochromatic_degree(g, u), delta);
            EXPECT_TRUE(d.cond_b);
            if (d.B_1 == 0) {
                ++cond_c_seen;
                for (auto x : classes[0].members)
                    for (auto y : unique)
                        if (g.adjacent(x, y)) { EXPECT_TRUE(oracle::rainbow3(g, v, x, y)); }
                EXPECT_TRUE(d.cond_c);
            }
            EXPECT_TRUE(d.passed());
        }
    }
    EXPECT_GT(equality_seen, 0u);
    EXPECT_GT(cond_c_seen, 0u);
}

TEST(Lnsz, Examples) {
    EXPECT_EQ(lnsz_lower(fx::rainbow_k3()), Rational(1));
    EXPECT_EQ(oracle::rainbow_triangles(fx::rainbow_k3()).size(), 1u);
    EXPECT_LT(lnsz_lower(fx::mono_complete(5)), Rational(0));
    const auto k5 = gen_proper_complete(5, 1);
    EXPECT_EQ(lnsz_lower(k5), Rational(10));
    EXPECT_GE(Rational(static_cast<std::int64_t>(oracle::rainbow_triangles(k5).size())), lnsz_lower(k5));
    EXPECT_EQ(lnsz_lower(ColoredGraph(4, {{0, 1, 1}})), Rational(0));
    EXPECT_EQ(lnsz_lower(gen_example1(3)), Rational(8));
}

TEST(LnszProperty, HoldsOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        Rng rng(seed);
        const auto n = 3 + uniform_below(rng, 10);
        const auto g = gen_random_colored(n, 0.5 + 0.5 * unit_real(rng), static_cast<Color>(2 + uniform_below(rng, 12)), seed);
        ASSERT_GE(Rational(static_cast<std::int64_t>(oracle::rainbow_triangles(g).size())), lnsz_lower(g));
    }
}
