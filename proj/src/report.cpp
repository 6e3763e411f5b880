#include "degdev/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace degdev {

using ordered_json = nlohmann::ordered_json;

const std::vector<CheckKind>& all_check_kinds() {
    static const std::vector<CheckKind> kinds = {
        CheckKind::irregularity, CheckKind::classical, CheckKind::bipartite,
        CheckKind::pair_lower,   CheckKind::pair_upper, CheckKind::min_sum,
        CheckKind::haemers,      CheckKind::lear,       CheckKind::ratios,
        CheckKind::pr1,          CheckKind::star_example,
    };
    return kinds;
}

std::string check_kind_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::irregularity: return "irregularity";
        case CheckKind::classical: return "classical";
        case CheckKind::bipartite: return "bipartite";
        case CheckKind::pair_lower: return "pair_lower";
        case CheckKind::pair_upper: return "pair_upper";
        case CheckKind::min_sum: return "min_sum";
        case CheckKind::haemers: return "haemers";
        case CheckKind::lear: return "lear";
        case CheckKind::ratios: return "ratios";
        case CheckKind::pr1: return "pr1";
        case CheckKind::star_example: return "star_example";
    }
    throw std::logic_error("unreachable");
}

std::set<CheckKind> parse_check_selection(const std::string& comma_list) {
    std::set<CheckKind> out;
    std::stringstream in(comma_list);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        if (token == "all") {
            for (CheckKind k : all_check_kinds()) out.insert(k);
            continue;
        }
        bool found = false;
        for (CheckKind k : all_check_kinds())
            if (check_kind_name(k) == token) {
                out.insert(k);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown check name '" + token + "'");
    }
    if (out.empty()) throw std::invalid_argument("no checks selected");
    return out;
}

void recompute_summary(AuditReport& report) {
    ReportSummary s;
    s.graphs = static_cast<std::int64_t>(report.entries.size());
    for (const GraphEntry& e : report.entries)
        for (const CheckResult& c : e.checks) {
            ++s.checks_run;
            if (c.holds)
                ++s.holds;
            else
                ++s.findings;
        }
    report.summary = s;
}

namespace {

ordered_json witness_to_json(const Witness& w) {
    ordered_json j = ordered_json::object();
    if (w.k) j["k"] = *w.k;
    if (w.pairing) j["pairing"] = *w.pairing;
    if (w.subset) j["subset"] = *w.subset;
    if (!w.values.empty()) {
        ordered_json vals = ordered_json::object();
        for (const auto& [name, value] : w.values) vals[name] = value;
        j["values"] = std::move(vals);
    }
    return j;
}

Witness witness_from_json(const ordered_json& j) {
    Witness w;
    if (j.contains("k")) w.k = j.at("k").get<int>();
    if (j.contains("pairing")) w.pairing = j.at("pairing").get<std::string>();
    if (j.contains("subset")) w.subset = j.at("subset").get<std::vector<int>>();
    if (j.contains("values"))
        for (const auto& [name, value] : j.at("values").items())
            w.values.push_back({name, value.get<double>()});
    return w;
}

ordered_json check_to_json(const CheckResult& c) {
    ordered_json j = ordered_json::object();
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin;
    j["holds"] = c.holds;
    j["tol"] = c.tol;
    ordered_json w = witness_to_json(c.witness);
    if (!w.empty()) j["witness"] = std::move(w);
    return j;
}

CheckResult check_from_json(const ordered_json& j) {
    CheckResult c;
    c.name = j.at("name").get<std::string>();
    c.lhs = j.at("lhs").get<double>();
    c.rhs = j.at("rhs").get<double>();
    c.margin = j.at("margin").get<double>();
    c.holds = j.at("holds").get<bool>();
    c.tol = j.at("tol").get<double>();
    if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"));
    return c;
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
}

}  // namespace

std::string report_to_json(const AuditReport& report) {
    ordered_json j;
    j["tool"] = "degdev";
    j["version"] = report.tool_version;
    j["schema_version"] = report.schema_version;
    ordered_json cfg;
    cfg["tol"] = report.config.tol;
    cfg["seed"] = report.config.seed;
    cfg["corpus"] = report.config.corpus;
    cfg["checks"] = report.config.checks;
    j["config"] = std::move(cfg);

    ordered_json entries = ordered_json::array();
    for (const GraphEntry& e : report.entries) {
        ordered_json je;
        je["graph_id"] = e.graph_id;
        je["n"] = e.n;
        je["m"] = e.m;
        je["s"] = to_double(e.s);
        je["s_exact"] = to_string(e.s);
        je["var"] = to_double(e.var);
        je["var_exact"] = to_string(e.var);
        je["mu_max"] = e.mu_max;
        je["mu_min"] = e.mu_min;
        if (e.upper_ratio) je["upper_ratio"] = *e.upper_ratio;
        if (e.lower_ratio_paper_norm)
            je["lower_ratio_paper_norm"] = *e.lower_ratio_paper_norm;
        ordered_json checks = ordered_json::array();
        for (const CheckResult& c : e.checks) checks.push_back(check_to_json(c));
        je["checks"] = std::move(checks);
        entries.push_back(std::move(je));
    }
    j["graphs"] = std::move(entries);

    ordered_json sum;
    sum["graphs"] = report.summary.graphs;
    sum["checks_run"] = report.summary.checks_run;
    sum["holds"] = report.summary.holds;
    sum["findings"] = report.summary.findings;
    sum["breaches"] = report.summary.breaches;
    j["summary"] = std::move(sum);
    return j.dump(2) + "\n";
}

AuditReport report_from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    AuditReport r;
    r.tool_version = j.at("version").get<std::string>();
    r.schema_version = j.at("schema_version").get<int>();
    r.config.tol = j.at("config").at("tol").get<double>();
    r.config.seed = j.at("config").at("seed").get<std::uint64_t>();
    r.config.corpus = j.at("config").at("corpus").get<std::string>();
    r.config.checks = j.at("config").at("checks").get<std::vector<std::string>>();
    for (const auto& je : j.at("graphs")) {
        GraphEntry e;
        e.graph_id = je.at("graph_id").get<std::string>();
        e.n = je.at("n").get<int>();
        e.m = je.at("m").get<int>();
        e.s = rational_from_string(je.at("s_exact").get<std::string>());
        e.var = rational_from_string(je.at("var_exact").get<std::string>());
        e.mu_max = je.at("mu_max").get<double>();
        e.mu_min = je.at("mu_min").get<double>();
        if (je.contains("upper_ratio")) e.upper_ratio = je.at("upper_ratio").get<double>();
        if (je.contains("lower_ratio_paper_norm"))
            e.lower_ratio_paper_norm = je.at("lower_ratio_paper_norm").get<double>();
        for (const auto& jc : je.at("checks")) e.checks.push_back(check_from_json(jc));
        r.entries.push_back(std::move(e));
    }
    r.summary.graphs = j.at("summary").at("graphs").get<std::int64_t>();
    r.summary.checks_run = j.at("summary").at("checks_run").get<std::int64_t>();
    r.summary.holds = j.at("summary").at("holds").get<std::int64_t>();
    r.summary.findings = j.at("summary").at("findings").get<std::int64_t>();
    r.summary.breaches = j.at("summary").at("breaches").get<std::int64_t>();
    return r;
}

namespace {

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string report_to_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "graph_id,n,m,check,pairing,k,lhs,rhs,margin,holds,tol\n";
    for (const GraphEntry& e : report.entries)
        for (const CheckResult& c : e.checks) {
            out << e.graph_id << ',' << e.n << ',' << e.m << ',' << c.name << ','
                << (c.witness.pairing ? *c.witness.pairing : "") << ',';
            if (c.witness.k) out << *c.witness.k;
            out << ',' << csv_double(c.lhs) << ',' << csv_double(c.rhs) << ','
                << csv_double(c.margin) << ',' << (c.holds ? "true" : "false") << ','
                << csv_double(c.tol) << '\n';
        }
    return out.str();
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool selected(const AuditOptions& o, CheckKind k) { return o.checks.count(k) > 0; }

std::vector<std::vector<int>> haemers_partitions(const Graph& g,
                                                 const AuditOptions& o) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> parts;
    if (n < 2) return parts;
    if (n <= o.haemers_exhaustive_cap) {
        // every bipartition once: vertex 0 always on the V1 side
        const std::uint32_t limit = std::uint32_t{1} << (n - 1);
        for (std::uint32_t mask = 0; mask + 1 < limit; ++mask) {
            std::vector<int> v1{0};
            for (int u = 1; u < n; ++u)
                if (mask & (std::uint32_t{1} << (u - 1))) v1.push_back(u);
            parts.push_back(std::move(v1));
        }
    } else {
        std::mt19937_64 rng(o.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
        for (int i = 0; i < o.haemers_random_partitions; ++i) {
            std::vector<int> v1;
            do {
                v1.clear();
                for (int u = 0; u < n; ++u)
                    if (uniform01(rng) < 0.5) v1.push_back(u);
            } while (v1.empty() || static_cast<int>(v1.size()) == n);
            parts.push_back(std::move(v1));
        }
    }
    return parts;
}

}  // namespace

GraphEntry audit_graph(const std::string& graph_id, const Graph& g,
                       const std::optional<BipartiteLayout>& layout,
                       const AuditOptions& o) {
    const int n = g.vertex_count();
    const DegreeProfile profile = degree_profile(g);
    const Spectrum spec = graph_spectrum(g);

    GraphEntry e;
    e.graph_id = graph_id;
    e.n = n;
    e.m = profile.m;
    e.s = profile.s;
    e.var = profile.var;
    e.mu_max = spec.values.front();
    e.mu_min = spec.values.back();

    const bool needs_complement =
        n >= 2 && (selected(o, CheckKind::pair_lower) ||
                   selected(o, CheckKind::pair_upper) || selected(o, CheckKind::min_sum));
    std::optional<Spectrum> comp_spec;
    if (needs_complement) comp_spec = graph_spectrum(g.complement());

    auto append = [&](std::vector<CheckResult> results) {
        for (CheckResult& c : results) e.checks.push_back(std::move(c));
    };

    if (selected(o, CheckKind::irregularity))
        append(check_irregularity_bounds(g, spec, o.tol));
    if (selected(o, CheckKind::classical))
        append(classical_bound_checks(g, layout, spec, o.tol));
    if (selected(o, CheckKind::bipartite) && layout)
        append(check_bipartite_bounds(g, *layout, spec, o.tol));
    if (selected(o, CheckKind::pair_lower) && n >= 2)
        append(check_pair_lower(g, spec, *comp_spec, o.tol));
    if (selected(o, CheckKind::pair_upper) && n >= 2)
        append(check_pair_upper_audit(g, spec, *comp_spec, o.tol));
    if (selected(o, CheckKind::min_sum) && n >= 2)
        e.checks.push_back(check_min_sum(g, spec, *comp_spec, o.tol));
    if (selected(o, CheckKind::haemers))
        for (const auto& v1 : haemers_partitions(g, o))
            e.checks.push_back(haemers_min_bound(g, v1, spec, o.tol));
    if (selected(o, CheckKind::lear) && n >= 2)
        e.checks.push_back(lear_split(g, o.tol, o.lear_exhaustive_cap));
    if (selected(o, CheckKind::ratios)) {
        TightnessRatios r = tightness_ratios(g, spec);
        e.upper_ratio = r.upper_ratio;
        e.lower_ratio_paper_norm = r.lower_ratio_paper_norm;
    }
    if (selected(o, CheckKind::star_example) && o.star_leaves)
        append(star_example_audit(*o.star_leaves, o.tol));
    return e;
}

namespace {

std::vector<std::string> selection_names(const AuditOptions& o) {
    std::vector<std::string> names;
    for (CheckKind k : all_check_kinds())
        if (o.checks.count(k)) names.push_back(check_kind_name(k));
    return names;
}

}  // namespace

AuditReport run_exhaustive_corpus(int n, const AuditOptions& options) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("exhaustive corpus supports 1 <= n <= 7");
    AuditReport report;
    report.config.tol = options.tol;
    report.config.seed = options.seed;
    report.config.corpus = "exhaustive:n=" + std::to_string(n);
    report.config.checks = selection_names(options);

    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_bitmask(n, mask);
        report.entries.push_back(
            audit_graph(std::to_string(mask), g, std::nullopt, options));
    }
    recompute_summary(report);
    return report;
}

namespace {

// Doubling ladder 1,2,4,... capped at nmax, always including nmax itself.
std::vector<int> size_ladder(int nmax, int minimum) {
    std::vector<int> sizes;
    for (int s = 1; s < nmax; s *= 2)
        if (s >= minimum) sizes.push_back(s);
    if (nmax >= minimum) sizes.push_back(nmax);
    return sizes;
}

}  // namespace

AuditReport run_family_corpus(const FamilySpec& spec, const AuditOptions& options_in) {
    AuditOptions options = options_in;
    AuditReport report;
    report.config.tol = options.tol;
    report.config.seed = options.seed;
    report.config.checks = selection_names(options);

    std::ostringstream desc;
    desc << "family:" << spec.family;

    auto add = [&](const std::string& id, const Graph& g,
                   const std::optional<BipartiteLayout>& layout,
                   std::optional<int> star_leaves = std::nullopt) {
        AuditOptions per = options;
        per.star_leaves = star_leaves;
        report.entries.push_back(audit_graph(id, g, layout, per));
    };

    if (spec.family == "complete" || spec.family == "empty" ||
        spec.family == "path" || spec.family == "cycle" || spec.family == "star") {
        if (spec.nmax < 1) throw std::invalid_argument("family needs --nmax >= 1");
        desc << ":nmax=" << spec.nmax;
        int minimum = spec.family == "cycle" ? 3 : 1;
        for (int size : size_ladder(spec.nmax, minimum)) {
            std::string id = spec.family + "/" + std::to_string(size);
            if (spec.family == "complete")
                add(id, complete_graph(size), std::nullopt);
            else if (spec.family == "empty")
                add(id, empty_graph(size), std::nullopt);
            else if (spec.family == "path")
                add(id, path_graph(size), std::nullopt);
            else if (spec.family == "cycle")
                add(id, cycle_graph(size), std::nullopt);
            else
                add(id, star_graph(size), std::nullopt, size);
        }
    } else if (spec.family == "complete_bipartite") {
        if (spec.a >= 1 && spec.b >= 1) {
            desc << ":a=" << spec.a << ":b=" << spec.b;
            add("complete_bipartite/" + std::to_string(spec.a) + "_" +
                    std::to_string(spec.b),
                complete_bipartite(spec.a, spec.b), BipartiteLayout{spec.a});
        } else if (spec.nmax >= 1) {
            // near-balanced ladder K_{a,a+1}
            desc << ":nmax=" << spec.nmax;
            for (int a : size_ladder(spec.nmax, 1))
                add("complete_bipartite/" + std::to_string(a) + "_" +
                        std::to_string(a + 1),
                    complete_bipartite(a, a + 1), BipartiteLayout{a});
        } else {
            throw std::invalid_argument(
                "complete_bipartite needs --a/--b or --nmax");
        }
    } else if (spec.family == "disjoint_union") {
        if (spec.a < 1 || spec.b < 1)
            throw std::invalid_argument("disjoint_union needs --a and --b");
        desc << ":a=" << spec.a << ":b=" << spec.b;
        add("disjoint_union/" + std::to_string(spec.a) + "_" + std::to_string(spec.b),
            disjoint_union(complete_graph(spec.a), complete_graph(spec.b)),
            std::nullopt);
    } else if (spec.family == "gnp") {
        if (spec.count < 1 || spec.nmax < 2)
            throw std::invalid_argument("gnp needs --count >= 1 and --nmax >= 2");
        desc << ":nmax=" << spec.nmax << ":count=" << spec.count;
        std::mt19937_64 rng(options.seed);
        const bool want_pr1 = options.checks.count(CheckKind::pr1) > 0;
        for (int i = 0; i < spec.count; ++i) {
            int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.nmax - 1));
            double p = 0.1 + 0.8 * uniform01(rng);
            Graph g = gnp_random(n, p, rng());
            GraphEntry entry =
                audit_graph("gnp/" + std::to_string(i), g, std::nullopt, options);
            if (want_pr1) {
                // gap check against an independent draw on the same vertex set
                Graph h = gnp_random(n, 0.1 + 0.8 * uniform01(rng), rng());
                for (CheckResult& c : pr1_gap_check(g, h, std::nullopt, options.tol))
                    entry.checks.push_back(std::move(c));
            }
            report.entries.push_back(std::move(entry));
        }
    } else if (spec.family == "random_bipartite") {
        if (spec.count < 1 || spec.nmax < 1)
            throw std::invalid_argument(
                "random_bipartite needs --count >= 1 and --nmax >= 1");
        desc << ":nmax=" << spec.nmax << ":count=" << spec.count;
        std::mt19937_64 rng(options.seed);
        for (int i = 0; i < spec.count; ++i) {
            int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.nmax));
            int b = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.nmax));
            double p = 0.1 + 0.8 * uniform01(rng);
            add("random_bipartite/" + std::to_string(i), random_bipartite(a, b, p, rng()),
                BipartiteLayout{a});
        }
    } else {
        throw std::invalid_argument("unknown family '" + spec.family + "'");
    }

    report.config.corpus = desc.str();
    recompute_summary(report);
    return report;
}

}  // namespace degdev
