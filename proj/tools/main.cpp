// fairdist: fair probability distributions over combinatorial solution sets.
//
// Exit codes: 0 success, 1 internal error, 2 parse/flag error, 3 model
// assumption violated, 4 enumeration cap exceeded, 5 infeasible.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdist/analysis.hpp"
#include "fairdist/colgen.hpp"
#include "fairdist/errors.hpp"
#include "fairdist/graph.hpp"
#include "fairdist/group_fairness.hpp"
#include "fairdist/io.hpp"
#include "fairdist/rational.hpp"
#include "fairdist/set_system.hpp"

namespace {

using namespace fairdist;

struct Options {
    std::string graph_path;
    std::string groups_path;
    std::string output_path;
    std::string kind;
    std::string measure = "uniform";
    std::string method = "auto";
    std::size_t cap = 100000;
    std::string distribution_path;
    std::uint64_t seed = 0;
    int count = 1;
    std::string require;
    std::string weights_path;
};

const char* bool_name(bool b) { return b ? "true" : "false"; }

int cmd_compute(const Options& o) {
    const GraphDocument doc = read_graph_file(o.graph_path);
    const ProblemKind kind = problem_kind_from_string(o.kind);
    const FairnessMeasure measure = fairness_measure_from_string(o.measure);
    const ComputeOptions copts{solve_method_from_string(o.method), o.cap};
    const std::vector<std::string> ground = ground_labels(doc.graph, kind);

    std::optional<GroupConstraints> constraints;
    if (!o.groups_path.empty())
        constraints = read_group_constraints_file(o.groups_path, ground);

    const FairnessResult res = compute_fairness(
        doc.graph, kind, measure, constraints ? &*constraints : nullptr, copts);

    if (!o.output_path.empty()) {
        std::ofstream out(o.output_path);
        if (!out) throw ParseError("cannot open file: " + o.output_path);
        write_distribution_document(out, res, ground);
    }
    std::cout << "p = " << format_rational(res.value) << '\n';
    return 0;
}

int cmd_bounds(const Options& o) {
    const GraphDocument doc = read_graph_file(o.graph_path);
    const BoundsReport r = bounds_report(doc.graph);
    std::cout << "edge_fairness_lower = " << format_rational(r.edge_fairness_bounds.first)
              << '\n'
              << "edge_fairness_upper = " << format_rational(r.edge_fairness_bounds.second)
              << '\n'
              << "rawlsian_vertex_lower = " << format_rational(r.rawlsian_vertex_lower)
              << '\n'
              << "pu_positive = " << bool_name(r.pu_positive) << '\n'
              << "pu_dichotomy_lower = " << format_rational(r.pu_dichotomy_lower) << '\n';
    return 0;
}

int cmd_invariants(const Options& o) {
    const GraphDocument doc = read_graph_file(o.graph_path);
    const GraphInvariants inv = compute_invariants(doc.graph);
    std::cout << "matching_number = " << inv.matching_number << '\n'
              << "fractional_matching_number = "
              << format_rational(inv.fractional_matching_number) << '\n'
              << "has_perfect_matching = " << bool_name(inv.has_perfect_matching) << '\n'
              << "has_fractional_perfect_matching = "
              << bool_name(inv.has_fractional_perfect_matching) << '\n'
              << "max_degree = " << inv.max_degree << '\n'
              << "min_degree = " << inv.min_degree << '\n';
    return 0;
}

// Parses "color=count,color=count"; every class of the coloring must appear.
std::vector<int> parse_requirements(const std::string& text,
                                    const std::vector<std::string>& color_names) {
    std::vector<int> r(color_names.size(), -1);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto pos = item.find('=');
        if (pos == std::string::npos)
            throw ParseError("requirement must look like color=count: " + item);
        const std::string name = item.substr(0, pos);
        const std::string digits = item.substr(pos + 1);
        const auto it = std::find(color_names.begin(), color_names.end(), name);
        if (it == color_names.end()) throw ParseError("unknown color name: " + name);
        const auto idx = static_cast<std::size_t>(it - color_names.begin());
        if (r[idx] >= 0) throw ParseError("duplicate requirement for color " + name);
        try {
            std::size_t used = 0;
            const int value = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
            r[idx] = value;
        } catch (const std::exception&) {
            throw ParseError("requirement count must be an integer: " + item);
        }
    }
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] < 0)
            throw ParseError("missing requirement for color " + color_names[i]);
    return r;
}

std::vector<Rational> read_weights(const std::string& path, const Graph& g) {
    std::vector<Rational> w(g.vertex_count(), Rational(1));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("weights must map vertex labels to fractions");
    for (const auto& [label, value] : doc.items()) {
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (g.label(u) == label) { v = u; break; }
        if (v < 0) throw ParseError("unknown vertex label: " + label);
        if (!value.is_string()) throw ParseError("weight for " + label + " must be a string");
        w[v] = parse_rational(value.get<std::string>());
    }
    return w;
}

int cmd_ebm(const Options& o) {
    const GraphDocument doc = read_graph_file(o.graph_path);
    if (!doc.has_colors) throw ParseError("ebm requires a colored graph");
    for (int v = 0; v < doc.graph.vertex_count(); ++v)
        if (doc.color[v] < 0)
            throw ParseError("ebm requires a total coloring; vertex " +
                             doc.graph.label(v) + " is uncolored");
    const VertexColoring colors{doc.color, static_cast<int>(doc.color_names.size())};

    const std::vector<int> r = parse_requirements(o.require, doc.color_names);
    std::vector<int> sizes(doc.color_names.size(), 0);
    for (int v = 0; v < doc.graph.vertex_count(); ++v) ++sizes[doc.color[v]];
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] > sizes[i])
            throw ParseError("requirement for color " + doc.color_names[i] +
                             " exceeds the class size");

    const std::vector<Rational> w = o.weights_path.empty()
                                        ? std::vector<Rational>(doc.graph.vertex_count(),
                                                                Rational(1))
                                        : read_weights(o.weights_path, doc.graph);

    const auto m = exact_budgeted_matching(doc.graph, colors, r, w);
    if (!m) {
        std::cout << "INFEASIBLE\n";
        return 5;
    }
    for (int e : m->edges) {
        const auto [u, v] = doc.graph.edges()[e];
        std::cout << '{' << doc.graph.label(u) << ',' << doc.graph.label(v) << "}\n";
    }
    std::cout << "weight = " << format_rational(m->weight) << '\n';
    return 0;
}

int cmd_sample(const Options& o) {
    const DistributionDocument doc = read_distribution_file(o.distribution_path);
    // Sample over entry indices, then echo each drawn member's labels.
    Distribution d;
    for (std::size_t i = 0; i < doc.members.size(); ++i)
        d.support.push_back({{static_cast<int>(i)}, doc.probabilities[i]});
    for (const std::vector<int>& draw : sample(d, o.seed, o.count)) {
        const std::vector<std::string>& labels = doc.members.at(draw.at(0));
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (j) std::cout << ' ';
            std::cout << labels[j];
        }
        std::cout << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair probability distributions over combinatorial solution sets"};
    app.require_subcommand(1);
    Options o;

    CLI::App* compute =
        app.add_subcommand("compute", "Solve for the fairest distribution");
    compute->add_option("--graph", o.graph_path, "Graph document path")->required();
    compute->add_option("--kind", o.kind,
                        "Problem kind: matching-edges, matching-vertices, "
                        "independent-set, vertex-cover, clique")
        ->required();
    compute->add_option("--measure", o.measure, "uniform or rawlsian")
        ->capture_default_str();
    compute->add_option("--method", o.method, "auto, exact, or colgen")
        ->capture_default_str();
    compute->add_option("--cap", o.cap, "Enumeration cap for the exact method")
        ->capture_default_str();
    compute->add_option("--groups", o.groups_path, "Group constraints document path");
    compute->add_option("--output", o.output_path,
                        "Write the distribution document to this path");

    CLI::App* bounds = app.add_subcommand("bounds", "Closed-form fairness bounds");
    bounds->add_option("--graph", o.graph_path, "Graph document path")->required();

    CLI::App* invariants =
        app.add_subcommand("invariants", "Matching invariants of the graph");
    invariants->add_option("--graph", o.graph_path, "Graph document path")->required();

    CLI::App* ebm = app.add_subcommand("ebm", "Exact-budgeted maximum-weight matching");
    ebm->add_option("--graph", o.graph_path, "Graph document path (total coloring)")
        ->required();
    ebm->add_option("--require", o.require, "Exact per-color counts: color=count,...")
        ->required();
    ebm->add_option("--weights", o.weights_path,
                    "Vertex weight document path (default: all 1)");

    CLI::App* samplecmd =
        app.add_subcommand("sample", "Draw solutions from a distribution document");
    samplecmd->add_option("--distribution", o.distribution_path,
                          "Distribution document path")
        ->required();
    samplecmd->add_option("--seed", o.seed, "Random seed")->required();
    samplecmd->add_option("--count", o.count, "Number of draws")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(o);
        if (bounds->parsed()) return cmd_bounds(o);
        if (invariants->parsed()) return cmd_invariants(o);
        if (ebm->parsed()) return cmd_ebm(o);
        if (samplecmd->parsed()) return cmd_sample(o);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
