#pragma once

// ECG text format:
//
//   ecg <n> <m>
//   <u> <v> <color>      (exactly m lines, 0 <= u < v < n, color >= 1)
//
// Lines starting with '#' and blank lines are ignored. Output lists edges in
// lexicographic (u, v) order so equal graphs serialize to equal bytes.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

class EcgParseError : public std::runtime_error {
public:
    EcgParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_int(std::string_view tok, std::int64_t& out) {
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace detail

inline ColoredGraph load_ecg(std::string_view text) {
    bool have_header = false;
    std::int64_t n = 0, m = 0;
    std::vector<ColoredEdge> edges;
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen_at;  // edge -> first line
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto toks = detail::split_ws(line);
        if (toks.empty() || toks.front().front() == '#') {
            if (eol == text.size()) break;
            continue;
        }
        last_line = line_no;

        if (!have_header) {
            if (toks.size() != 3 || toks[0] != "ecg")
                throw EcgParseError(line_no, "expected header 'ecg <n> <m>'");
            if (!detail::parse_int(toks[1], n) || n < 0)
                throw EcgParseError(line_no, "malformed vertex count");
            if (!detail::parse_int(toks[2], m) || m < 0)
                throw EcgParseError(line_no, "malformed edge count");
            if (n > 4096) throw EcgParseError(line_no, "vertex count exceeds 4096");
            have_header = true;
            continue;
        }

        if (static_cast<std::int64_t>(edges.size()) == m)
            throw EcgParseError(line_no, "more edge lines than the header's m=" + std::to_string(m));
        if (toks.size() != 3) throw EcgParseError(line_no, "expected '<u> <v> <color>'");
        std::int64_t u = 0, v = 0, c = 0;
        if (!detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
            throw EcgParseError(line_no, "malformed vertex index");
        if (!detail::parse_int(toks[2], c)) throw EcgParseError(line_no, "malformed color");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw EcgParseError(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
        if (u == v) throw EcgParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (c <= 0) throw EcgParseError(line_no, "color must be a positive integer");
        if (c > static_cast<std::int64_t>(UINT32_MAX)) throw EcgParseError(line_no, "color too large");
        if (u > v) std::swap(u, v);
        auto [it, fresh] = seen_at.try_emplace({u, v}, line_no);
        if (!fresh)
            throw EcgParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                             std::to_string(v) + " (first at line " +
                                             std::to_string(it->second) + ")");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
        if (eol == text.size()) break;
    }

    if (!have_header) throw EcgParseError(line_no, "missing 'ecg' header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw EcgParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
    return ColoredGraph(static_cast<std::size_t>(n), edges);
}

inline std::string save_ecg(const ColoredGraph& g) {
    std::string out = "ecg " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += std::to_string(e.color);
        out += '\n';
    }
    return out;
}

inline ColoredGraph read_ecg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_ecg(buf.str());
}

inline void write_ecg_file(const ColoredGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << save_ecg(g);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rainbow
