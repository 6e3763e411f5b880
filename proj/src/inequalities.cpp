#include "degdev/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace degdev {

CheckResult make_check(std::string name, double lhs, double rhs, double tol,
                       Witness witness) {
    CheckResult r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.holds = r.margin >= -tol;
    r.tol = tol;
    r.witness = std::move(witness);
    return r;
}

std::vector<CheckResult> check_irregularity_bounds(const Graph& g,
                                                   const Spectrum& spec, double tol) {
    const DegreeProfile p = degree_profile(g);
    const int n = g.vertex_count();
    const double sd = to_double(p.s);
    const double vard = to_double(p.var);
    const double eps = spec.values.front() - to_double(p.mean_degree);

    std::vector<CheckResult> out;
    Witness base;
    base.values.push_back({"epsilon", eps});

    if (p.m == 0) {
        out.push_back(make_check("irregularity_lower_var", 0.0, eps, tol, base));
        out.push_back(make_check("irregularity_lower_s", 0.0, eps, tol, base));
    } else {
        const double root2m = std::sqrt(2.0 * p.m);
        out.push_back(
            make_check("irregularity_lower_var", vard / (2.0 * root2m), eps, tol, base));
        out.push_back(make_check("irregularity_lower_s",
                                 sd * sd / (2.0 * n * n * root2m), eps, tol, base));
    }
    out.push_back(make_check("irregularity_upper_sqrt_s", eps, std::sqrt(sd), tol, base));

    // Exact rational chain: s^2/n^2 <= var <= s.
    const Rational s_sq_over_n2 = p.s * p.s / Rational(static_cast<std::int64_t>(n) * n);
    const bool chain_holds = s_sq_over_n2 <= p.var && p.var <= p.s;
    CheckResult chain;
    chain.name = "deviation_chain";
    chain.lhs = to_double(s_sq_over_n2);
    chain.rhs = sd;
    chain.margin = std::min(vard - to_double(s_sq_over_n2), sd - vard);
    chain.holds = chain_holds;
    chain.tol = 0.0;
    chain.witness.values.push_back({"var", vard});
    out.push_back(std::move(chain));
    return out;
}

std::vector<CheckResult> check_irregularity_bounds(const Graph& g, double tol) {
    return check_irregularity_bounds(g, graph_spectrum(g), tol);
}

std::vector<CheckResult> check_bipartite_bounds(const Graph& g,
                                                const BipartiteLayout& layout,
                                                const Spectrum& spec, double tol) {
    layout.require_valid(g);
    const int n = g.vertex_count();
    const int a = layout.a;
    const int b = n - a;
    const int m = g.edge_count();
    const double s2 = to_double(s2_deviation(g, layout));
    const double root_ab = std::sqrt(static_cast<double>(a) * b);
    const double eps = spec.values.front() - m / root_ab;

    Witness w;
    w.values.push_back({"epsilon_bipartite", eps});
    w.values.push_back({"s2", s2});

    std::vector<CheckResult> out;
    out.push_back(make_check("bipartite_lower",
                             s2 * s2 / (2.0 * n * n * root_ab), eps, tol, w));
    out.push_back(make_check("bipartite_upper", eps, std::sqrt(s2 / 2.0), tol, w));
    return out;
}

std::vector<CheckResult> check_bipartite_bounds(const Graph& g,
                                                const BipartiteLayout& layout,
                                                double tol) {
    return check_bipartite_bounds(g, layout, graph_spectrum(g), tol);
}

namespace {

void require_pair_sizes(const Graph& g, const Spectrum& spec,
                        const Spectrum& comp_spec) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    if (spec.values.size() != n || comp_spec.values.size() != n)
        throw std::invalid_argument("spectrum length does not match vertex count");
    if (n < 2) throw std::invalid_argument("pair checks need at least two vertices");
}

}  // namespace

std::vector<CheckResult> check_pair_lower(const Graph& g, const Spectrum& spec,
                                          const Spectrum& comp_spec, double tol) {
    require_pair_sizes(g, spec, comp_spec);
    const int n = g.vertex_count();
    const double s = to_double(degree_profile(g).s);
    const double bound = -1.0 - 2.0 * std::sqrt(2.0 * s);

    std::vector<CheckResult> out;
    for (int k = 1; k <= n - 1; ++k) {
        const double mk = spec.values[static_cast<std::size_t>(k) - 1];
        const double mpair = comp_spec.values[static_cast<std::size_t>(n) - k];
        Witness w;
        w.k = k;
        w.pairing = "n-k+1";
        w.values.push_back({"mu_k", mk});
        w.values.push_back({"mu_pair", mpair});
        out.push_back(make_check("pair_lower", bound, mk + mpair, tol, std::move(w)));
    }
    return out;
}

std::vector<CheckResult> check_pair_lower(const Graph& g, double tol) {
    return check_pair_lower(g, graph_spectrum(g), graph_spectrum(g.complement()), tol);
}

std::vector<CheckResult> check_pair_upper_audit(const Graph& g, const Spectrum& spec,
                                                const Spectrum& comp_spec, double tol) {
    require_pair_sizes(g, spec, comp_spec);
    const int n = g.vertex_count();

    std::vector<CheckResult> out;
    auto emit = [&](int k, int j, const char* pairing) {
        const double mk = spec.values[static_cast<std::size_t>(k) - 1];
        const double mpair = comp_spec.values[static_cast<std::size_t>(j) - 1];
        Witness w;
        w.k = k;
        w.pairing = pairing;
        w.values.push_back({"mu_k", mk});
        w.values.push_back({"mu_pair", mpair});
        out.push_back(make_check("pair_upper", mk + mpair, -1.0, tol, std::move(w)));
    };
    for (int k = 1; k <= n - 1; ++k) emit(k, n - k + 1, "n-k+1");
    for (int k = 2; k <= n; ++k) emit(k, n - k + 2, "n-k+2");
    return out;
}

std::vector<CheckResult> check_pair_upper_audit(const Graph& g, double tol) {
    return check_pair_upper_audit(g, graph_spectrum(g),
                                  graph_spectrum(g.complement()), tol);
}

CheckResult check_min_sum(const Graph& g, const Spectrum& spec,
                          const Spectrum& comp_spec, double tol) {
    require_pair_sizes(g, spec, comp_spec);
    const int n = g.vertex_count();
    const double s = to_double(degree_profile(g).s);
    const double lhs = spec.values.back() + comp_spec.values.back();
    const double rhs = -1.0 - s * s / (static_cast<double>(n) * n * n);
    Witness w;
    w.values.push_back({"mu_min", spec.values.back()});
    w.values.push_back({"mu_min_complement", comp_spec.values.back()});
    return make_check("min_sum", lhs, rhs, tol, std::move(w));
}

CheckResult check_min_sum(const Graph& g, double tol) {
    return check_min_sum(g, graph_spectrum(g), graph_spectrum(g.complement()), tol);
}

CheckResult haemers_min_bound(const Graph& g, const std::vector<int>& v1,
                              const Spectrum& spec, double tol) {
    const int n = g.vertex_count();
    if (v1.empty() || static_cast<int>(v1.size()) >= n)
        throw std::invalid_argument("partition class must be nonempty and proper");
    const SubsetEdgeCounts c = subset_edge_counts(g, v1);
    const double n1 = static_cast<double>(v1.size());
    const double n2 = static_cast<double>(n) - n1;
    const double r1 = c.inside / n1;
    const double r2 = c.outside / n2;
    const double rhs =
        r1 + r2 - std::sqrt((r1 - r2) * (r1 - r2) +
                            static_cast<double>(c.cut) * c.cut / (n1 * n2));
    Witness w;
    w.subset = v1;
    w.values.push_back({"e1", static_cast<double>(c.inside)});
    w.values.push_back({"e2", static_cast<double>(c.outside)});
    w.values.push_back({"e3", static_cast<double>(c.cut)});
    return make_check("haemers", spec.values.back(), rhs, tol, std::move(w));
}

CheckResult haemers_min_bound(const Graph& g, const std::vector<int>& v1, double tol) {
    return haemers_min_bound(g, v1, graph_spectrum(g), tol);
}

namespace {

int half_split_objective(const Graph& g, const std::vector<int>& s) {
    const SubsetEdgeCounts c = subset_edge_counts(g, s);
    return c.outside - c.inside;
}

}  // namespace

CheckResult lear_split(const Graph& g, double tol, int exhaustive_cap) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("split audit needs at least two vertices");
    const int half = n / 2;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return g.degree(u) < g.degree(v); });
    std::vector<int> s_set(order.begin(), order.begin() + half);
    std::sort(s_set.begin(), s_set.end());

    const double lhs = to_double(degree_profile(g).s) / 2.0;
    const double rhs = static_cast<double>(half_split_objective(g, s_set));

    Witness w;
    w.subset = s_set;
    if (n <= exhaustive_cap) {
        // Best achievable value over every floor(n/2)-subset.
        std::vector<int> comb(static_cast<std::size_t>(half));
        std::iota(comb.begin(), comb.end(), 0);
        int best = half_split_objective(g, comb);
        while (true) {
            int i = half - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - half + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < half; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
            best = std::max(best, half_split_objective(g, comb));
        }
        w.values.push_back({"exhaustive_best", static_cast<double>(best)});
    }
    return make_check("lear_split", lhs, rhs, tol, std::move(w));
}

TightnessRatios tightness_ratios(const Graph& g, const Spectrum& spec) {
    const DegreeProfile p = degree_profile(g);
    TightnessRatios r;
    if (p.s == Rational(0)) return r;
    const int n = g.vertex_count();
    const double sd = to_double(p.s);
    const double eps = spec.values.front() - to_double(p.mean_degree);
    r.upper_ratio = eps / std::sqrt(sd);
    if (p.m >= 1)
        r.lower_ratio_paper_norm =
            eps * static_cast<double>(n) * n * std::sqrt(static_cast<double>(p.m)) /
            (sd * sd);
    return r;
}

TightnessRatios tightness_ratios(const Graph& g) {
    return tightness_ratios(g, graph_spectrum(g));
}

std::vector<CheckResult> pr1_gap_check(const Graph& g1, const Graph& g2,
                                       const std::optional<BipartiteLayout>& layout,
                                       double tol) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("gap check requires equal vertex counts");
    int only_in_g1 = 0;
    for (const Edge& e : g1.edges())
        if (!g2.has_edge(e.u, e.v)) ++only_in_g1;
    const double diff =
        graph_spectrum(g1).values.front() - graph_spectrum(g2).values.front();

    Witness w;
    w.values.push_back({"edges_only_in_first", static_cast<double>(only_in_g1)});

    std::vector<CheckResult> out;
    out.push_back(make_check("pr1_general", diff, std::sqrt(2.0 * only_in_g1), tol, w));
    if (layout) {
        layout->require_valid(g1);
        layout->require_valid(g2);
        out.push_back(
            make_check("pr1_bipartite", diff, std::sqrt(static_cast<double>(only_in_g1)),
                       tol, w));
    }
    return out;
}

std::vector<CheckResult> classical_bound_checks(
    const Graph& g, const std::optional<BipartiteLayout>& layout,
    const Spectrum& spec, double tol) {
    const ClassicalBounds b = classical_bounds(g, layout, spec.values.front());
    std::vector<CheckResult> out;
    out.push_back(make_check("hofmeister", b.hofmeister_lower, b.mu, tol));
    out.push_back(make_check("stanley", b.mu, b.stanley_upper, tol));
    out.push_back(make_check("berman_zhang", b.mu, b.berman_zhang_upper, tol));
    if (b.cvetkovic_upper)
        out.push_back(make_check("cvetkovic", b.mu, *b.cvetkovic_upper, tol));
    if (b.rayleigh_lower)
        out.push_back(make_check("rayleigh", *b.rayleigh_lower, b.mu, tol));
    return out;
}

std::vector<CheckResult> star_example_audit(int leaves, double tol) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    const Graph g = star_graph(leaves);
    const double s = to_double(degree_profile(g).s);
    const double claimed_s = 2.0 * (leaves - 1.0) / (leaves + 1.0);

    const Spectrum spec = graph_spectrum(g);
    const Spectrum comp = graph_spectrum(g.complement());
    const double pair_sum = spec.values.back() + comp.values[1];
    const double claimed_pair = -1.0 - std::sqrt(static_cast<double>(leaves));

    // Equality audits: lhs is the absolute disagreement, so a mismatch larger
    // than tol is a finding.
    auto equality = [&](const char* name, double computed, double claimed) {
        Witness w;
        w.values.push_back({"computed", computed});
        w.values.push_back({"claimed", claimed});
        return make_check(name, std::abs(computed - claimed), 0.0, tol, std::move(w));
    };
    std::vector<CheckResult> out;
    out.push_back(equality("star_example_s", s, claimed_s));
    out.push_back(equality("star_example_pair_sum", pair_sum, claimed_pair));
    return out;
}

}  // namespace degdev
