#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

struct EdgeMinimality {
    bool minimal = true;
    std::optional<Edge> witness;  // smallest edge whose removal keeps both color degrees
};

namespace detail {

// counts[v][alpha] = d_alpha(v)
inline std::vector<std::map<Color, std::size_t>> class_sizes(const ColoredGraph& g) {
    std::vector<std::map<Color, std::size_t>> counts(g.order());
    for (const auto& e : g.edges()) {
        ++counts[e.u][e.color];
        ++counts[e.v][e.color];
    }
    return counts;
}

}  // namespace detail

// An edge is removable iff its color repeats at both endpoints.
inline EdgeMinimality is_edge_minimal(const ColoredGraph& g) {
    const auto counts = detail::class_sizes(g);
    for (const auto& e : g.edges())
        if (counts[e.u].at(e.color) >= 2 && counts[e.v].at(e.color) >= 2)
            return {false, e.edge()};
    return {};
}

// Deletes the lexicographically smallest removable edge until none remains.
// Class sizes only shrink, so an edge that is not removable stays so; one
// ordered pass therefore equals restarting the scan after every deletion.
inline ColoredGraph edge_minimal_reduce(const ColoredGraph& g) {
    auto counts = detail::class_sizes(g);
    std::vector<ColoredEdge> kept;
    kept.reserve(g.size());
    for (const auto& e : g.edges()) {
        auto& cu = counts[e.u][e.color];
        auto& cv = counts[e.v][e.color];
        if (cu >= 2 && cv >= 2) {
            --cu;
            --cv;
        } else {
            kept.push_back(e);
        }
    }
    return ColoredGraph(g.order(), kept);
}

}  // namespace rainbow
