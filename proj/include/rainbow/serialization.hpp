#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rainbow/colored_graph.hpp"
#include "rainbow/counting_bounds.hpp"
#include "rainbow/matching_cover.hpp"
#include "rainbow/rainbow_search.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["text"] = r.denominator() == 1 ? std::to_string(r.numerator())
                                     : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
    return j;
}

inline Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json to_json(const ColorDegreeProfile& p) {
    Json j;
    j["vertex"] = p.vertex;
    j["degree"] = p.degree;
    j["dc"] = p.dc;
    j["dmon"] = p.dmon;
    j["sorted_sizes"] = p.sorted_sizes;
    Json classes = Json::array();
    for (const auto& c : p.classes) classes.push_back({{"color", c.color}, {"members", c.members}});
    j["classes"] = std::move(classes);
    j["unique_nbrs"] = p.unique_nbrs.to_vector();
    return j;
}

// Includes the color of every edge the certificate cites so it can be
// audited without the source graph.
inline Json to_json(const Certificate& c, const ColoredGraph& g) {
    Json j;
    j["kind"] = to_string(c.kind);
    if (c.base.empty()) j["base"] = nullptr;
    else if (c.base.size() == 1) j["base"] = c.base.front();
    else j["base"] = c.base;
    if (c.kind == CertificateKind::book) j["apexes"] = c.apexes();
    Json tris = Json::array();
    std::set<Edge> cited;
    for (const auto& t : c.triangles) {
        tris.push_back(Json::array({t[0], t[1], t[2]}));
        cited.insert(Edge::of(t[0], t[1]));
        cited.insert(Edge::of(t[0], t[2]));
        cited.insert(Edge::of(t[1], t[2]));
    }
    j["triangles"] = std::move(tris);
    Json colors = Json::array();
    for (const auto& e : cited) colors.push_back(Json::array({e.u, e.v, g.color(e.u, e.v)}));
    j["edge_colors"] = std::move(colors);
    return j;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "book") c.kind = CertificateKind::book;
    else if (kind == "fan") c.kind = CertificateKind::fan;
    else if (kind == "disjoint_family") c.kind = CertificateKind::disjoint_family;
    else if (kind == "spanning_fan") c.kind = CertificateKind::spanning_fan;
    else throw std::invalid_argument("unknown certificate kind '" + kind + "'");
    const auto& base = j.at("base");
    if (base.is_number()) c.base = {base.get<Vertex>()};
    else if (base.is_array()) c.base = base.get<std::vector<Vertex>>();
    for (const auto& t : j.at("triangles")) c.triangles.push_back(make_triangle(t.at(0), t.at(1), t.at(2)));
    return c;
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["vertex"] = r.vertex;
    j["edge_minimal"] = r.edge_minimal;
    Json per = Json::array();
    for (const auto& c : r.per_color) {
        per.push_back({{"color", c.color},
                       {"d_i", c.d_i},
                       {"rt_observed", c.rt_observed},
                       {"lemma1_rhs", c.lemma1_rhs},
                       {"lemma1_rhs_proof_form", c.lemma1_rhs_proof_form},
                       {"B_i", c.B_i},
                       {"slack", c.slack()}});
    }
    j["per_color"] = std::move(per);
    j["B_total"] = r.B_total;
    j["B_forms_agree"] = r.b_forms_agree();
    j["corollary1_lower"] = to_json(r.corollary1_lower);
    j["rt"] = r.rt_vertex;
    j["lemma1_holds"] = r.lemma1_holds();
    j["corollary1_holds"] = r.corollary1_holds();
    return j;
}

inline Json to_json(const Lemma2Diagnostics& d) {
    return Json{{"vertex", d.vertex},       {"max_mono", d.max_mono},
                {"B", d.B},                 {"B_1", d.B_1},
                {"b_nonnegative", d.b_nonnegative}, {"equality_case", d.equality_case},
                {"cond_a", d.cond_a},       {"cond_b", d.cond_b},
                {"cond_c_applicable", d.cond_c_applicable}, {"cond_c", d.cond_c},
                {"passed", d.passed()}};
}

inline Json to_json(const PartitionDiagnostics& d) {
    Json j;
    j["n"] = d.n;
    j["matching_number"] = d.matching_number;
    j["cover_number"] = d.cover_number;
    j["p"] = d.p;
    j["v0_size"] = d.v0_size;
    j["connected"] = d.connected;
    j["eq3"] = d.eq3;
    j["fact1"] = d.fact1;
    j["v0_saturated"] = d.v0_saturated;
    j["cover_le_n_minus_p"] = d.cover_le_n_minus_p;
    j["n_minus_p_le_bound"] = d.n_minus_p_le_bound;
    Json l6;
    l6["applicable"] = d.lemma6_applicable;
    l6["cover_bound"] = d.lemma6_cover_bound;
    l6["v0_nonempty"] = d.lemma6_v0_nonempty;
    l6["equality_case"] = d.lemma6_equality_case;
    l6["components_complete_odd"] = d.lemma6_components_complete_odd;
    l6["cover_is_n_minus_p"] = d.lemma6_cover_is_n_minus_p;
    l6["cover_construction_valid"] = d.lemma6_cover_construction_valid;
    l6["holds"] = d.lemma6_holds();
    j["lemma6"] = std::move(l6);
    j["identities_hold"] = d.identities_hold();
    return j;
}

inline Json to_json(const GallaiPartition& p) {
    Json j;
    j["n"] = p.order;
    j["virtual_vertex"] = p.virtual_vertex();
    Json m = Json::array();
    for (const auto& e : p.matching.edges()) m.push_back(to_json(e));
    j["matching"] = std::move(m);
    j["v0"] = p.v0;
    j["components"] = p.components;
    j["virtual_neighbors"] = p.virtual_neighbors;
    Json gamma = Json::array();
    for (const auto& e : p.gamma_edges) gamma.push_back(to_json(e));
    j["gamma_edges"] = std::move(gamma);
    return j;
}

}  // namespace rainbow
