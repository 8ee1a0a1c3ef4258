// ecgtool: generate, inspect and verify edge-colored graphs in ECG format.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"

namespace {

using namespace rainbow;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "lo:hi" or a single value.
template <typename T>
std::pair<T, T> parse_range(const std::string& text, const char* flag) {
    auto parse_one = [&](const std::string& s) -> T {
        std::istringstream in(s);
        T value{};
        if (!(in >> value) || !in.eof()) throw UsageError(std::string("bad value for ") + flag + ": '" + text + "'");
        return value;
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const auto v = parse_one(text);
        return {v, v};
    }
    const auto lo = parse_one(text.substr(0, colon));
    const auto hi = parse_one(text.substr(colon + 1));
    if (hi < lo) throw UsageError(std::string("empty range for ") + flag + ": '" + text + "'");
    return {lo, hi};
}

ColoredGraph read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return load_ecg(buf.str());
    }
    return read_ecg_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

void write_json(const std::string& path, const Json& j) {
    if (path.empty()) std::cout << j.dump(2) << '\n';
    else write_text(path, j.dump(2) + "\n");
}

Json analyze(const ColoredGraph& g, bool with_bounds) {
    const auto idx = build_index(g);
    Json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["colors"] = g.palette().size();
    if (g.order() > 0) j["min_color_degree"] = min_color_degree(g);
    j["max_monochromatic_degree"] = max_monochromatic_degree(g);
    const auto em = is_edge_minimal(g);
    j["edge_minimal"] = em.minimal;
    if (em.witness) j["removable_edge"] = to_json(*em.witness);
    j["rainbow_triangles"] = idx.count();
    if (g.order() > 0) j["lnsz_lower"] = to_json(lnsz_lower(g));

    const auto book = max_book(g, idx);
    j["max_book"] = book;
    if (book > 0) j["book"] = to_json(*find_book(g, idx, book), g);
    const auto fan = max_fan(g);
    j["max_fan"] = fan;
    if (fan > 0) j["fan"] = to_json(*find_fan(g, fan), g);
    if (g.order() % 2 == 1 && g.order() >= 3 && min_color_degree(g) == g.order() - 1) {
        const auto sf = find_pc_spanning_fan(g);
        j["spanning_fan"] = sf ? to_json(*sf, g) : Json(nullptr);
    }
    if (with_bounds) {
        Json per = Json::array();
        for (Vertex v = 0; v < g.order(); ++v) per.push_back(to_json(bound_report(g, idx, v, em.minimal)));
        j["bounds"] = std::move(per);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-colored graph toolkit: rainbow triangles, books, fans, matchings"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string json_path;
    bool timing = false;

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated graph in ECG format");
    std::string gen_kind = "random";
    std::size_t gen_n = 10, gen_k = 3;
    double gen_p = 0.5;
    Color gen_colors = 5;
    std::vector<std::size_t> gen_parts;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "example1|random|simple|proper|proper-random|multipartite")
        ->check(CLI::IsMember({"example1", "random", "simple", "proper", "proper-random", "multipartite"}));
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--k", gen_k, "Parameter k for example1");
    gen->add_option("--p", gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--colors", gen_colors, "Palette size (multipartite: 0 = all distinct)");
    gen->add_option("--parts", gen_parts, "Part sizes for multipartite, e.g. 2,2,3")->delimiter(',');
    gen->add_option("--seed", seed);
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // analyze
    auto* an = app.add_subcommand("analyze", "Summarize a graph: degrees, rainbow triangles, books, fans");
    std::string an_in;
    bool an_bounds = false;
    an->add_option("input", an_in, "ECG file or - for stdin")->required();
    an->add_flag("--bounds", an_bounds, "Include per-vertex counting bounds");
    an->add_option("--json", json_path, "Write JSON here instead of stdout");

    // reduce
    auto* red = app.add_subcommand("reduce", "Delete removable edges until edge-minimal");
    std::string red_in, red_out;
    red->add_option("input", red_in, "ECG file or - for stdin")->required();
    red->add_option("-o,--out", red_out, "Output file (default stdout)");

    // partition
    auto* part = app.add_subcommand("partition", "Matching partition of the underlying graph");
    std::string part_in;
    part->add_option("input", part_in, "ECG file or - for stdin")->required();
    part->add_option("--json", json_path, "Write JSON here instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "Sample graphs meeting a theorem's hypothesis and check its conclusion");
    std::string ver_theorem, ver_n = "6:12", ver_k = "2", ver_colors = "2:12", ver_p = "0.2:0.9";
    std::size_t ver_budget = 1000, ver_attempts = 0;
    bool ver_no_repair = false;
    ver->add_option("--theorem", ver_theorem, "Theorem id, or example1_sharpness")->required();
    ver->add_option("--n", ver_n, "Vertex range lo:hi");
    ver->add_option("--k", ver_k, "k (a range lo:hi for example1_sharpness)");
    ver->add_option("--colors", ver_colors, "Palette range lo:hi");
    ver->add_option("--p", ver_p, "Edge probability range lo:hi");
    ver->add_option("--budget", ver_budget, "Admitted samples wanted");
    ver->add_option("--max-attempts", ver_attempts, "Sampling cap (default 50 x budget)");
    ver->add_flag("--no-repair", ver_no_repair, "Pure rejection sampling");
    ver->add_option("--seed", seed);
    ver->add_option("--json", json_path, "Write the report here instead of stdout");
    ver->add_flag("--timing", timing, "Include runtime in the report");

    // hly-search
    auto* hly = app.add_subcommand("hly-search", "Search for graphs without k disjoint rainbow triangles");
    std::string hly_n = "6:12", hly_colors = "2:12";
    std::size_t hly_k = 2, hly_budget = 1000;
    hly->add_option("--k", hly_k);
    hly->add_option("--n", hly_n, "Vertex range lo:hi");
    hly->add_option("--colors", hly_colors, "Palette range lo:hi");
    hly->add_option("--budget", hly_budget);
    hly->add_option("--seed", seed);
    hly->add_option("--json", json_path, "Write the report here instead of stdout");
    hly->add_flag("--timing", timing, "Include runtime in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            ColoredGraph g;
            if (gen_kind == "example1") {
                if (gen_k < 2) throw UsageError("--k must be >= 2 for example1");
                g = gen_example1(gen_k);
            } else if (gen_kind == "random") {
                if (gen_colors < 1) throw UsageError("--colors must be >= 1");
                g = gen_random_colored(gen_n, gen_p, gen_colors, seed);
            } else if (gen_kind == "simple") {
                g = injective_coloring(gen_random_simple(gen_n, gen_p, seed));
            } else if (gen_kind == "proper") {
                g = gen_proper_complete(gen_n, seed);
            } else if (gen_kind == "proper-random") {
                g = gen_random_proper_complete(gen_n, seed);
            } else {
                if (gen_parts.empty()) throw UsageError("--parts is required for multipartite");
                g = gen_complete_multipartite(gen_parts, gen_colors, seed);
            }
            write_text(gen_out, save_ecg(g));
            return kExitOk;
        }
        if (*an) {
            write_json(json_path, analyze(read_input(an_in), an_bounds));
            return kExitOk;
        }
        if (*red) {
            write_text(red_out, save_ecg(edge_minimal_reduce(read_input(red_in))));
            return kExitOk;
        }
        if (*part) {
            const auto h = read_input(part_in).uncolored();
            if (h.order() <= 2 * matching_number(h))
                throw UsageError("graph has a perfect matching; the partition needs n > 2 * matching number");
            const auto p = gallai_partition(h);
            Json j;
            j["partition"] = to_json(p);
            j["diagnostics"] = to_json(verify_partition_lemmas(h, p));
            write_json(json_path, j);
            return kExitOk;
        }
        Report report;
        if (*ver) {
            if (ver_theorem == "example1_sharpness") {
                const auto [klo, khi] = parse_range<std::size_t>(ver_k, "--k");
                report = check_example1_sharpness(klo, khi);
            } else {
                const auto id = parse_theorem_id(ver_theorem);
                if (!id) throw UsageError("unknown theorem '" + ver_theorem + "'");
                TheoremSpec spec;
                spec.id = *id;
                spec.k = parse_range<std::size_t>(ver_k, "--k").first;
                std::tie(spec.n_lo, spec.n_hi) = parse_range<std::size_t>(ver_n, "--n");
                std::tie(spec.c_lo, spec.c_hi) = parse_range<Color>(ver_colors, "--colors");
                std::tie(spec.p_lo, spec.p_hi) = parse_range<double>(ver_p, "--p");
                spec.budget = ver_budget;
                spec.max_attempts = ver_attempts;
                spec.seed = seed;
                spec.repair = !ver_no_repair;
                report = verify(spec);
            }
        } else {
            const auto [nlo, nhi] = parse_range<std::size_t>(hly_n, "--n");
            const auto [clo, chi] = parse_range<Color>(hly_colors, "--colors");
            report = search_hly_counterexample(hly_k, nlo, nhi, clo, chi, hly_budget, seed).report;
        }
        if (json_path.empty()) std::cout << report_to_json(report, timing).dump(2) << '\n';
        else emit_report(report, json_path, timing);
        if (report.error) {
            std::cerr << "error: " << *report.error << '\n';
            return kExitUsage;
        }
        return report.ok() ? kExitOk : kExitFailures;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EcgParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
