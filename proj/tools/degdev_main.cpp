// degdev CLI: graph measures, spectra, regularization runs, and batch
// inequality audits with JSON/CSV reports.
//
// Exit codes: 0 clean, 1 findings present, 2 usage or input error,
// 3 internal invariant breach (including eigensolver non-convergence).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "degdev/graph.hpp"
#include "degdev/graph_io.hpp"
#include "degdev/inequalities.hpp"
#include "degdev/regularize.hpp"
#include "degdev/report.hpp"
#include "degdev/spectra.hpp"

namespace {

using namespace degdev;

struct GlobalOpts {
    double tol = kDefaultCheckTol;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ParseError(ParseError::Code::io, "cannot open '" + out_path + "'");
    f << text;
}

int emit_report(AuditReport& report, const GlobalOpts& g) {
    recompute_summary(report);
    emit(g.format == "csv" ? report_to_csv(report) : report_to_json(report), g.out);
    return report.summary.findings > 0 ? 1 : 0;
}

std::string base_name(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

int cmd_measures(const std::string& input) {
    ParsedGraph pg = read_edge_list_file(input);
    const Graph& g = pg.graph;
    DegreeProfile p = degree_profile(g);
    Spectrum spec = graph_spectrum(g);
    double eps = spec.values.front() - to_double(p.mean_degree);

    std::cout << "n " << g.vertex_count() << "\n";
    std::cout << "m " << p.m << "\n";
    std::cout << "degrees";
    for (int d : p.degrees) std::cout << ' ' << d;
    std::cout << "\n";
    std::printf("mean_degree %s (%.12g)\n", to_string(p.mean_degree).c_str(),
                to_double(p.mean_degree));
    std::printf("s %s (%.12g)\n", to_string(p.s).c_str(), to_double(p.s));
    std::printf("var %s (%.12g)\n", to_string(p.var).c_str(), to_double(p.var));
    std::printf("mu %.12g\n", spec.values.front());
    std::printf("epsilon %.12g\n", eps);
    if (pg.layout) {
        Rational s2 = s2_deviation(g, *pg.layout);
        std::printf("s2 %s (%.12g)\n", to_string(s2).c_str(), to_double(s2));
    }
    return 0;
}

int cmd_spectrum(const std::string& input) {
    ParsedGraph pg = read_edge_list_file(input);
    Spectrum spec = graph_spectrum(pg.graph);
    for (std::size_t i = 0; i < spec.values.size(); ++i)
        std::printf("%s%.12g", i ? " " : "", spec.values[i]);
    std::printf("\nresidual %.3g\n", spec.residual);
    return 0;
}

int cmd_regularize(const std::string& input, const std::string& mode,
                   const std::string& trace, const GlobalOpts& g) {
    ParsedGraph pg = read_edge_list_file(input);
    RegularizationOutcome outcome = [&] {
        if (mode == "rough") return rough_regularize(pg.graph);
        if (mode == "bipartite") {
            if (!pg.layout)
                throw ParseError(ParseError::Code::malformed_header,
                                 "bipartite mode needs a bipartite input header");
            return bipartite_rough_regularize(pg.graph, *pg.layout);
        }
        if (mode == "fine") return fine_regularize(pg.graph);
        throw CLI::ValidationError("--mode must be rough, bipartite or fine");
    }();

    std::optional<BipartiteLayout> layout =
        mode == "bipartite" ? pg.layout : std::nullopt;
    emit(format_edge_list(outcome.result, layout), g.out);
    if (!trace.empty()) {
        std::ofstream f(trace);
        if (!f) throw ParseError(ParseError::Code::io, "cannot open '" + trace + "'");
        f << format_edit_script(outcome.script);
    }
    std::cout << "edits " << outcome.script.steps.size() << " <= bound "
              << to_string(outcome.certified_bound) << "\n";
    return 0;
}

int cmd_check(const std::string& input, const std::string& checks_arg,
              const GlobalOpts& g) {
    ParsedGraph pg = read_edge_list_file(input);
    AuditOptions options;
    options.tol = g.tol;
    options.seed = g.seed;
    options.checks = parse_check_selection(checks_arg);
    // pair-based and family-specific checks only make sense under corpus;
    // "all" silently narrows to what applies to a single graph
    const bool explicit_all = checks_arg.find("all") != std::string::npos;
    for (CheckKind corpus_only : {CheckKind::pr1, CheckKind::star_example}) {
        if (options.checks.count(corpus_only) && !explicit_all)
            throw std::invalid_argument("'" + check_kind_name(corpus_only) +
                                        "' needs the corpus command");
        options.checks.erase(corpus_only);
    }

    AuditReport report;
    report.config.tol = g.tol;
    report.config.seed = g.seed;
    report.config.corpus = "file:" + base_name(input);
    for (CheckKind k : all_check_kinds())
        if (options.checks.count(k)) report.config.checks.push_back(check_kind_name(k));
    report.entries.push_back(audit_graph(base_name(input), pg.graph, pg.layout, options));
    return emit_report(report, g);
}

int cmd_corpus(int exhaustive_n, const FamilySpec& family, const std::string& checks_arg,
               const GlobalOpts& g) {
    AuditOptions options;
    options.tol = g.tol;
    options.seed = g.seed;
    options.checks = parse_check_selection(checks_arg);

    AuditReport report;
    if (exhaustive_n > 0) {
        if (exhaustive_n > 7)
            throw std::invalid_argument("exhaustive corpus capped at n = 7");
        report = run_exhaustive_corpus(exhaustive_n, options);
    } else if (!family.family.empty()) {
        report = run_family_corpus(family, options);
    } else {
        throw std::invalid_argument("corpus needs --exhaustive or --family");
    }
    return emit_report(report, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degdev: degree deviation measures, graph regularization, and "
                 "spectral bound audits"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "check tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized corpora")
        ->capture_default_str();
    app.add_option("--format", g.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write output to a file instead of stdout");
    app.fallthrough();

    std::string input, mode = "rough", trace, checks = "all";
    int exhaustive_n = 0;
    FamilySpec family;

    auto* measures = app.add_subcommand("measures", "degree statistics of one graph");
    measures->add_option("input", input, "edge-list file")->required();

    auto* spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues");
    spectrum->add_option("input", input, "edge-list file")->required();

    auto* regularize =
        app.add_subcommand("regularize", "rewire toward a regular graph");
    regularize->add_option("input", input, "edge-list file")->required();
    regularize->add_option("--mode", mode, "rough, bipartite or fine")
        ->check(CLI::IsMember({"rough", "bipartite", "fine"}))
        ->capture_default_str();
    regularize->add_option("--trace", trace, "write the edit script to a file");

    auto* check = app.add_subcommand("check", "inequality audit of one graph");
    check->add_option("input", input, "edge-list file")->required();
    check->add_option("--checks", checks, "comma-separated check names or 'all'")
        ->capture_default_str();

    auto* corpus = app.add_subcommand("corpus", "audit a generated graph corpus");
    corpus->add_option("--exhaustive", exhaustive_n,
                       "all labeled graphs on n vertices (n <= 7)");
    corpus->add_option("--family", family.family,
                       "complete|empty|star|path|cycle|complete_bipartite|"
                       "disjoint_union|gnp|random_bipartite");
    corpus->add_option("--nmax", family.nmax, "size ceiling for family ladders");
    corpus->add_option("--a", family.a, "first class/component size");
    corpus->add_option("--b", family.b, "second class/component size");
    corpus->add_option("--p", family.p, "edge probability");
    corpus->add_option("--count", family.count, "number of random graphs");
    corpus->add_option("--checks", checks, "comma-separated check names or 'all'")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (measures->parsed()) return cmd_measures(input);
        if (spectrum->parsed()) return cmd_spectrum(input);
        if (regularize->parsed()) return cmd_regularize(input, mode, trace, g);
        if (check->parsed()) return cmd_check(input, checks, g);
        if (corpus->parsed()) return cmd_corpus(exhaustive_n, family, checks, g);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const AlgorithmInvariantError& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
