#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/counting_bounds.hpp"
#include "rainbow/ecg_io.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/matching_cover.hpp"
#include "rainbow/rainbow_search.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/serialization.hpp"

namespace rainbow {

enum class TheoremId {
    li_triangle,
    book_bk,
    fan_fk,
    original_i,
    original_ii,
    lemma1,
    lemma2,
    prop1,
    lnsz,
    eg_partition,
    lemma3_uncolored,
    prop_fan_uncolored,
    prop_fan_halfdeg,
    prop_book_halfdeg,
    fact_spanning_fan,
    hly_conjecture,
};

inline constexpr std::array<std::pair<TheoremId, std::string_view>, 16> kTheoremNames{{
    {TheoremId::li_triangle, "li_triangle"},
    {TheoremId::book_bk, "book_bk"},
    {TheoremId::fan_fk, "fan_fk"},
    {TheoremId::original_i, "original_i"},
    {TheoremId::original_ii, "original_ii"},
    {TheoremId::lemma1, "lemma1"},
    {TheoremId::lemma2, "lemma2"},
    {TheoremId::prop1, "prop1"},
    {TheoremId::lnsz, "lnsz"},
    {TheoremId::eg_partition, "eg_partition"},
    {TheoremId::lemma3_uncolored, "lemma3_uncolored"},
    {TheoremId::prop_fan_uncolored, "prop_fan_uncolored"},
    {TheoremId::prop_fan_halfdeg, "prop_fan_halfdeg"},
    {TheoremId::prop_book_halfdeg, "prop_book_halfdeg"},
    {TheoremId::fact_spanning_fan, "fact_spanning_fan"},
    {TheoremId::hly_conjecture, "hly_conjecture"},
}};

inline std::string_view to_string(TheoremId id) {
    for (const auto& [tid, name] : kTheoremNames)
        if (tid == id) return name;
    return "?";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const auto& [tid, tname] : kTheoremNames)
        if (tname == name) return tid;
    return std::nullopt;
}

struct TheoremSpec {
    TheoremId id = TheoremId::li_triangle;
    std::size_t k = 2;
    std::size_t n_lo = 6, n_hi = 12;
    Color c_lo = 2, c_hi = 12;
    double p_lo = 0.2, p_hi = 0.9;
    std::size_t budget = 1000;       // admitted samples wanted
    std::size_t max_attempts = 0;    // 0 means 50 * budget
    std::uint64_t seed = 1;
    bool repair = true;              // false: pure rejection sampling
};

struct Witness {
    std::size_t sample_index = 0;
    std::string ecg;
    std::string gap;
};

struct Report {
    std::string theorem;
    Json params = Json::object();
    std::size_t samples_attempted = 0;
    std::size_t samples_admitted = 0;
    std::size_t conclusion_failures = 0;
    double runtime_ms = 0;
    std::optional<std::string> error;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    bool ok() const { return !error && conclusion_failures == 0; }
};

inline constexpr std::size_t kMaxWitnesses = 16;

// Largest family of pairwise vertex-disjoint rainbow triangles, by branching
// on the smallest undecided vertex (left uncovered, or covered by one of its
// triangles). Independent of the triangle-list search in rainbow_search.
inline std::size_t max_disjoint_rainbow_packing(const ColoredGraph& g) {
    const auto n = g.order();
    std::function<std::size_t(VertexSet&)> best_from = [&](VertexSet& open) -> std::size_t {
        if (open.size() < 3) return 0;
        const Vertex v = open.front();
        open.erase(v);
        std::size_t best = best_from(open);
        const auto nbrs = (g.neighbor_set(v) & open).to_vector();
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const Vertex x = nbrs[i], y = nbrs[j];
                if (!is_rainbow_triangle(g, v, x, y)) continue;
                if (best >= (open.size() + 1) / 3) break;
                open.erase(x);
                open.erase(y);
                best = std::max(best, 1 + best_from(open));
                open.insert(x);
                open.insert(y);
            }
        open.insert(v);
        return best;
    };
    auto open = VertexSet::all(n);
    return best_from(open);
}

namespace detail {

inline std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

enum class SampleKind { repaired_colored, repaired_uncolored, reduced, plain_colored, plain_uncolored, proper_complete };

struct TheoremTraits {
    SampleKind sample = SampleKind::plain_colored;
    std::function<bool(std::size_t n, std::size_t k)> n_ok = [](std::size_t, std::size_t) { return true; };
    // Minimum (color) degree demanded by the hypothesis, if any.
    std::function<std::optional<std::size_t>(std::size_t n, std::size_t k)> degree_target =
        [](std::size_t, std::size_t) { return std::optional<std::size_t>{}; };
    // nullopt when the conclusion holds, else a description of the gap.
    std::function<std::optional<std::string>(const ColoredGraph&, std::size_t k)> conclusion;
};

inline std::optional<std::string> need_book(const ColoredGraph& g, std::size_t k) {
    const auto idx = build_index(g);
    const auto best = max_book(g, idx);
    if (best >= k) {
        const auto cert = find_book(g, idx, k);
        if (!cert || !check_certificate(g, *cert)) return "book certificate failed its self-check";
        return std::nullopt;
    }
    return "max_book=" + std::to_string(best) + " < k=" + std::to_string(k);
}

inline std::optional<std::string> need_fan(const ColoredGraph& g, std::size_t k) {
    const auto cert = find_fan(g, k);
    if (cert) {
        if (!check_certificate(g, *cert)) return "fan certificate failed its self-check";
        return std::nullopt;
    }
    return "max_fan=" + std::to_string(max_fan(g)) + " < k=" + std::to_string(k);
}

inline TheoremTraits traits_for(TheoremId id) {
    TheoremTraits t;
    auto half_plus = [](std::size_t extra_num, std::size_t k_mult, std::size_t minus) {
        return [=](std::size_t n, std::size_t k) -> std::optional<std::size_t> {
            return ceil_half(n + extra_num + k_mult * k - minus);
        };
    };
    switch (id) {
        case TheoremId::li_triangle:
            t.sample = SampleKind::repaired_colored;
            t.degree_target = half_plus(1, 0, 0);
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                if (build_index(g).count() > 0) return std::nullopt;
                return "no rainbow triangle";
            };
            break;
        case TheoremId::book_bk:
            t.sample = SampleKind::repaired_colored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n + 2 >= 3 * k; };
            t.degree_target = half_plus(0, 1, 1);
            t.conclusion = need_book;
            break;
        case TheoremId::fan_fk:
            t.sample = SampleKind::repaired_colored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n >= 2 * k + 9; };
            t.degree_target = half_plus(0, 2, 3);
            t.conclusion = need_fan;
            break;
        case TheoremId::original_i:
            t.sample = SampleKind::repaired_colored;
            t.n_ok = [](std::size_t n, std::size_t) { return n >= 5; };
            t.degree_target = half_plus(1, 0, 0);
            t.conclusion = [](const ColoredGraph& g, std::size_t) { return need_book(g, 2); };
            break;
        case TheoremId::original_ii:
            t.sample = SampleKind::repaired_colored;
            t.n_ok = [](std::size_t n, std::size_t) { return n >= 13; };
            t.degree_target = half_plus(1, 0, 0);
            t.conclusion = [](const ColoredGraph& g, std::size_t) { return need_fan(g, 2); };
            break;
        case TheoremId::lemma1:
            t.sample = SampleKind::reduced;
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto idx = build_index(g);
                for (Vertex v = 0; v < g.order(); ++v) {
                    const auto r = bound_report(g, idx, v, true);
                    for (std::size_t i = 0; i < r.per_color.size(); ++i)
                        if (r.per_color[i].slack() < 0)
                            return "rt(v,N_i(v)) below bound at v=" + std::to_string(v) +
                                   " i=" + std::to_string(i + 1);
                    if (!r.corollary1_holds()) return "rt(v) below corollary bound at v=" + std::to_string(v);
                    if (!r.b_forms_agree()) return "B(v) forms disagree at v=" + std::to_string(v);
                }
                return std::nullopt;
            };
            break;
        case TheoremId::lemma2:
            t.sample = SampleKind::reduced;
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto idx = build_index(g);
                const auto delta = max_monochromatic_degree(g);
                for (Vertex v = 0; v < g.order(); ++v) {
                    if (monochromatic_degree(g, v) != delta) continue;
                    const auto d = lemma2_check(g, idx, v, true);
                    if (!d.passed()) return "lemma2 diagnostics failed at v=" + std::to_string(v) + ": " +
                                            to_json(d).dump();
                }
                return std::nullopt;
            };
            break;
        case TheoremId::prop1:
            t.sample = SampleKind::plain_colored;
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto idx = build_index(g);
                for (const auto& e : g.edges())
                    for (auto [v, x] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                        auto X = g.neighbor_set(v);
                        for (auto w : g.neighbors(v))
                            if (g.color(v, w) == e.color) X.erase(w);
                        const auto sigma = restriction_count(g, v, X, x);
                        if (idx.rt(v, x) < sigma)
                            return "rt(" + std::to_string(v) + "," + std::to_string(x) + ")=" +
                                   std::to_string(idx.rt(v, x)) + " < sigma=" + std::to_string(sigma);
                    }
                return std::nullopt;
            };
            break;
        case TheoremId::lnsz:
            t.sample = SampleKind::plain_colored;
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto count = build_index(g).count();
                const auto bound = lnsz_lower(g);
                if (Rational(static_cast<std::int64_t>(count)) >= bound) return std::nullopt;
                return "rainbow triangles " + std::to_string(count) + " < " + to_json(bound)["text"].get<std::string>();
            };
            break;
        case TheoremId::eg_partition:
            t.sample = SampleKind::plain_uncolored;
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto h = g.uncolored();
                const auto part = gallai_partition(h);
                const auto d = verify_partition_lemmas(h, part);
                if (d.all_hold()) return std::nullopt;
                return "partition diagnostics: " + to_json(d).dump();
            };
            break;
        case TheoremId::lemma3_uncolored:
            t.sample = SampleKind::repaired_uncolored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n + 2 >= 3 * k; };
            t.degree_target = half_plus(0, 1, 1);
            t.conclusion = need_book;
            break;
        case TheoremId::prop_fan_uncolored:
            t.sample = SampleKind::repaired_uncolored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n + 1 >= 3 * k; };
            t.degree_target = half_plus(0, 1, 1);
            t.conclusion = need_fan;
            break;
        case TheoremId::prop_fan_halfdeg:
            t.sample = SampleKind::repaired_uncolored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n >= 50 * k * k; };
            t.degree_target = half_plus(1, 0, 0);
            t.conclusion = need_fan;
            break;
        case TheoremId::prop_book_halfdeg:
            t.sample = SampleKind::repaired_uncolored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n >= 6 * k; };
            t.degree_target = half_plus(1, 0, 0);
            t.conclusion = need_book;
            break;
        case TheoremId::fact_spanning_fan:
            t.sample = SampleKind::proper_complete;
            t.n_ok = [](std::size_t n, std::size_t) { return n % 2 == 1 && n >= 3; };
            t.degree_target = [](std::size_t n, std::size_t) -> std::optional<std::size_t> { return n - 1; };
            t.conclusion = [](const ColoredGraph& g, std::size_t) -> std::optional<std::string> {
                const auto cert = find_pc_spanning_fan(g);
                if (!cert) return "no properly colored spanning fan";
                if (!check_certificate(g, *cert)) return "spanning fan certificate failed its self-check";
                return std::nullopt;
            };
            break;
        case TheoremId::hly_conjecture:
            t.sample = SampleKind::repaired_colored;
            t.n_ok = [](std::size_t n, std::size_t k) { return n >= 3 * k; };
            t.degree_target = half_plus(0, 1, 0);
            t.conclusion = [](const ColoredGraph& g, std::size_t k) -> std::optional<std::string> {
                const auto cert = find_disjoint_rainbow_triangles(g, k);
                if (cert) {
                    if (!check_certificate(g, *cert)) return "disjoint family failed its self-check";
                    return std::nullopt;
                }
                const auto packing = max_disjoint_rainbow_packing(g);
                if (packing >= k) return "search disagreement: exhaustive packing found " + std::to_string(packing);
                return "max disjoint rainbow triangles=" + std::to_string(packing) + " < k=" + std::to_string(k);
            };
            break;
    }
    return t;
}

inline bool uses_color_degree(SampleKind s) {
    return s != SampleKind::repaired_uncolored && s != SampleKind::plain_uncolored;
}

}  // namespace detail

// Re-checks a sample against the theorem's hypothesis from scratch.
inline bool hypothesis_holds(const TheoremSpec& spec, const ColoredGraph& g) {
    const auto t = detail::traits_for(spec.id);
    const auto n = g.order();
    if (n == 0 || !t.n_ok(n, spec.k)) return false;
    if (const auto target = t.degree_target(n, spec.k)) {
        const auto have = detail::uses_color_degree(t.sample) ? min_color_degree(g) : min_degree(g);
        if (have < *target) return false;
    }
    switch (spec.id) {
        case TheoremId::lemma1:
        case TheoremId::lemma2: return is_edge_minimal(g).minimal;
        case TheoremId::eg_partition: return n > 2 * matching_number(g.uncolored());
        default: return true;
    }
}

inline bool conclusion_holds(const TheoremSpec& spec, const ColoredGraph& g, std::string* gap = nullptr) {
    const auto res = detail::traits_for(spec.id).conclusion(g, spec.k);
    if (res && gap != nullptr) *gap = *res;
    return !res.has_value();
}

inline Json spec_to_json(const TheoremSpec& s) {
    Json j;
    j["theorem"] = std::string(to_string(s.id));
    j["k"] = s.k;
    j["n"] = {s.n_lo, s.n_hi};
    j["colors"] = {s.c_lo, s.c_hi};
    j["p"] = {s.p_lo, s.p_hi};
    j["budget"] = s.budget;
    j["max_attempts"] = s.max_attempts == 0 ? 50 * s.budget : s.max_attempts;
    j["seed"] = s.seed;
    j["repair"] = s.repair;
    return j;
}

// Draws the index-th candidate sample of a spec. Deterministic in (spec, index).
inline ColoredGraph draw_sample(const TheoremSpec& spec, const std::vector<std::size_t>& valid_n,
                                std::size_t index) {
    const auto t = detail::traits_for(spec.id);
    Rng rng(derive_seed(spec.seed, index));
    const auto n = valid_n[uniform_below(rng, valid_n.size())];
    const auto c = static_cast<Color>(uniform_between(rng, spec.c_lo, std::max(spec.c_lo, spec.c_hi)));
    const double p = spec.p_lo + (spec.p_hi - spec.p_lo) * unit_real(rng);
    const auto sub_seed = rng();

    switch (t.sample) {
        case detail::SampleKind::repaired_colored: {
            GraphBuilder b(gen_random_colored(n, p, c, sub_seed));
            if (spec.repair) repair_color_degree(b, t.degree_target(n, spec.k).value_or(0), c, rng);
            return b.build();
        }
        case detail::SampleKind::repaired_uncolored: {
            auto g = gen_random_simple(n, p, sub_seed);
            if (spec.repair) repair_degree(g, t.degree_target(n, spec.k).value_or(0), rng);
            return injective_coloring(g);
        }
        case detail::SampleKind::reduced: return edge_minimal_reduce(gen_random_colored(n, p, c, sub_seed));
        case detail::SampleKind::plain_colored: return gen_random_colored(n, p, c, sub_seed);
        case detail::SampleKind::plain_uncolored: return injective_coloring(gen_random_simple(n, p, sub_seed));
        case detail::SampleKind::proper_complete:
            return index % 2 == 0 ? gen_proper_complete(n, sub_seed) : gen_random_proper_complete(n, sub_seed);
    }
    throw std::logic_error("unreachable sample kind");
}

// Vertex counts in the requested range that satisfy the structural part of the
// hypothesis (and for which the degree demand is attainable).
inline std::vector<std::size_t> admissible_orders(const TheoremSpec& spec) {
    const auto t = detail::traits_for(spec.id);
    std::vector<std::size_t> out;
    for (std::size_t n = std::max<std::size_t>(spec.n_lo, 1); n <= spec.n_hi; ++n) {
        if (!t.n_ok(n, spec.k)) continue;
        if (const auto target = t.degree_target(n, spec.k); target && *target > n - 1) continue;
        out.push_back(n);
    }
    return out;
}

// Samples until `budget` graphs satisfy the hypothesis (or attempts run out)
// and evaluates the conclusion on each. Failures never stop the run.
inline Report verify(const TheoremSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.theorem = std::string(to_string(spec.id));
    r.params = spec_to_json(spec);

    const auto valid_n = admissible_orders(spec);
    if (spec.n_lo > spec.n_hi || spec.c_lo < 1 || spec.c_lo > spec.c_hi || spec.p_lo < 0 ||
        spec.p_hi > 1 || spec.p_lo > spec.p_hi) {
        r.error = "malformed parameter ranges";
    } else if (spec.k < 1) {
        r.error = "k must be >= 1";
    } else if (valid_n.empty()) {
        r.error = "unsatisfiable hypothesis: no n in [" + std::to_string(spec.n_lo) + "," +
                  std::to_string(spec.n_hi) + "] meets the hypothesis of " + r.theorem +
                  " for k=" + std::to_string(spec.k);
    }
    if (r.error) return r;

    const std::size_t max_attempts = spec.max_attempts == 0 ? 50 * spec.budget : spec.max_attempts;
    while (r.samples_admitted < spec.budget && r.samples_attempted < max_attempts) {
        const auto index = r.samples_attempted++;
        const auto g = draw_sample(spec, valid_n, index);
        if (!hypothesis_holds(spec, g)) continue;
        ++r.samples_admitted;
        std::string gap;
        if (!conclusion_holds(spec, g, &gap)) {
            ++r.conclusion_failures;
            if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back({index, save_ecg(g), gap});
        }
    }
    if (r.samples_admitted < spec.budget)
        r.notes.push_back("budget not reached: " + std::to_string(r.samples_admitted) + " admitted in " +
                          std::to_string(r.samples_attempted) + " attempts");
    if (r.conclusion_failures > r.witnesses.size())
        r.notes.push_back("only the first " + std::to_string(kMaxWitnesses) + " witnesses are embedded");
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// gen_example1(k) for each k: delta^c = 2k-2 = (n+k-1)/2 with n = 3k-3, and
// both the largest rainbow book and the largest rainbow fan have k-1 triangles.
inline Report check_example1_sharpness(std::size_t k_lo, std::size_t k_hi) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.theorem = "example1_sharpness";
    r.params = {{"k", {k_lo, k_hi}}};
    if (k_lo < 2 || k_lo > k_hi) {
        r.error = "k range must satisfy 2 <= k_lo <= k_hi";
        return r;
    }
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        ++r.samples_attempted;
        ++r.samples_admitted;
        const auto g = gen_example1(k);
        const auto n = g.order();
        const auto dc = min_color_degree(g);
        const auto book = max_book(g);
        const auto fan = max_fan(g);
        std::string gap;
        if (n != 3 * k - 3) gap += "n=" + std::to_string(n) + "; ";
        if (dc != 2 * k - 2 || 2 * dc != n + k - 1) gap += "delta^c=" + std::to_string(dc) + "; ";
        if (book != k - 1) gap += "max_book=" + std::to_string(book) + "; ";
        if (fan != k - 1) gap += "max_fan=" + std::to_string(fan) + "; ";
        if (!gap.empty()) {
            ++r.conclusion_failures;
            r.witnesses.push_back({k, save_ecg(g), "k=" + std::to_string(k) + ": " + gap});
        }
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct HlySearchResult {
    Report report;
    std::optional<Witness> counterexample;
};

// Samples graphs with delta^c >= (n+k)/2 on n >= 3k vertices and looks for k
// vertex-disjoint rainbow triangles; a miss is re-checked by exhaustive
// packing before being reported.
inline HlySearchResult search_hly_counterexample(std::size_t k, std::size_t n_lo, std::size_t n_hi, Color c_lo,
                                                 Color c_hi, std::size_t budget, std::uint64_t seed) {
    TheoremSpec spec;
    spec.id = TheoremId::hly_conjecture;
    spec.k = k;
    spec.n_lo = n_lo;
    spec.n_hi = n_hi;
    spec.c_lo = c_lo;
    spec.c_hi = c_hi;
    spec.budget = budget;
    spec.seed = seed;
    HlySearchResult out;
    if (k < 1 || n_lo < 3 * k || n_lo > n_hi) {
        out.report.theorem = "hly_conjecture";
        out.report.params = spec_to_json(spec);
        out.report.error = "malformed range: need 3k <= n_lo <= n_hi (k=" + std::to_string(k) + ", n=[" +
                           std::to_string(n_lo) + "," + std::to_string(n_hi) + "])";
        return out;
    }
    out.report = verify(spec);
    for (const auto& w : out.report.witnesses)
        if (w.gap.rfind("max disjoint", 0) == 0) {
            out.counterexample = w;
            break;
        }
    return out;
}

inline Json report_to_json(const Report& r, bool include_runtime = false) {
    Json j;
    j["schema"] = 1;
    j["theorem"] = r.theorem;
    j["params"] = r.params;
    j["samples_attempted"] = r.samples_attempted;
    j["samples_admitted"] = r.samples_admitted;
    j["conclusion_failures"] = r.conclusion_failures;
    j["ok"] = r.ok();
    j["error"] = r.error ? Json(*r.error) : Json(nullptr);
    j["notes"] = r.notes;
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"sample_index", w.sample_index}, {"gap", w.gap}, {"ecg", w.ecg}});
    j["witnesses"] = std::move(ws);
    if (include_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

// Runtime is omitted unless requested so equal runs give identical bytes.
inline void emit_report(const Report& r, const std::string& path, bool include_runtime = false) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << report_to_json(r, include_runtime).dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rainbow
