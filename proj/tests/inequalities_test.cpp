#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "degdev/graph.hpp"
#include "degdev/inequalities.hpp"

using namespace degdev;

namespace {

const CheckResult& find_check(const std::vector<CheckResult>& checks,
                              const std::string& name) {
    for (const CheckResult& c : checks)
        if (c.name == name) return c;
    REQUIRE(false);
    return checks.front();
}

bool all_hold(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.holds) return false;
    return true;
}

}  // namespace

TEST_CASE("irregularity bounds on fixed graphs") {
    // regular graph: every epsilon-based margin is exactly zero on both sides
    auto c5 = check_irregularity_bounds(cycle_graph(5));
    for (const auto& c : c5) CHECK(c.holds);
    CHECK(find_check(c5, "irregularity_lower_var").lhs == 0.0);
    CHECK(find_check(c5, "irregularity_lower_var").rhs ==
          doctest::Approx(0.0).epsilon(1e-9));

    auto star = check_irregularity_bounds(star_graph(3));
    double eps = std::sqrt(3.0) - 1.5;
    CHECK(find_check(star, "irregularity_lower_var").rhs ==
          doctest::Approx(eps).epsilon(1e-9));
    CHECK(find_check(star, "irregularity_lower_var").lhs ==
          doctest::Approx(0.75 / (2.0 * std::sqrt(6.0))).epsilon(1e-12));
    CHECK(find_check(star, "irregularity_lower_s").lhs ==
          doctest::Approx(9.0 / (2.0 * 16.0 * std::sqrt(6.0))).epsilon(1e-12));
    CHECK(find_check(star, "irregularity_upper_sqrt_s").rhs ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(all_hold(star));

    auto clique_plus = check_irregularity_bounds(
        disjoint_union(complete_graph(10), empty_graph(1)));
    CHECK(find_check(clique_plus, "irregularity_lower_var").rhs ==
          doctest::Approx(9.0 / 11.0).epsilon(1e-9));
    CHECK(find_check(clique_plus, "irregularity_lower_var").lhs ==
          doctest::Approx(0.3528).epsilon(1e-3));
    CHECK(find_check(clique_plus, "irregularity_upper_sqrt_s").rhs ==
          doctest::Approx(4.0452).epsilon(1e-4));
    CHECK(all_hold(clique_plus));

    // no edges: lower bounds report trivially with epsilon zero
    auto empty = check_irregularity_bounds(empty_graph(3));
    CHECK(find_check(empty, "irregularity_lower_s").lhs == 0.0);
    CHECK(all_hold(empty));
}

TEST_CASE("bipartite bounds") {
    auto k23 = check_bipartite_bounds(complete_bipartite(2, 3), BipartiteLayout{2});
    CHECK(all_hold(k23));
    CHECK(find_check(k23, "bipartite_lower").rhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(find_check(k23, "bipartite_upper").rhs == 0.0);

    // star minus one edge, center class of size one
    Graph broken = Graph::from_pairs(4, {{0, 1}, {0, 2}});
    auto checks = check_bipartite_bounds(broken, BipartiteLayout{1});
    double eps = std::sqrt(2.0) - 2.0 / std::sqrt(3.0);
    CHECK(find_check(checks, "bipartite_lower").lhs ==
          doctest::Approx((16.0 / 9.0) / (2.0 * 16.0 * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(find_check(checks, "bipartite_lower").rhs ==
          doctest::Approx(eps).epsilon(1e-9));
    CHECK(find_check(checks, "bipartite_upper").rhs ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(all_hold(checks));

    CHECK_THROWS_AS(check_bipartite_bounds(complete_graph(3), BipartiteLayout{1}),
                    std::invalid_argument);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int a = 1 + static_cast<int>(rng() % 12);
        int b = 1 + static_cast<int>(rng() % 12);
        double p = 0.1 + 0.8 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        CHECK(all_hold(check_bipartite_bounds(random_bipartite(a, b, p, rng()),
                                              BipartiteLayout{a})));
    }
}

TEST_CASE("pair lower bound") {
    auto c4 = check_pair_lower(cycle_graph(4));
    REQUIRE(c4.size() == 3);
    const CheckResult& k2 = c4[1];
    CHECK(*k2.witness.k == 2);
    CHECK(k2.lhs == doctest::Approx(-1.0).epsilon(1e-12));  // s = 0
    CHECK(k2.rhs == doctest::Approx(-1.0).epsilon(1e-9));   // 0 + (-1)
    CHECK(all_hold(c4));

    auto star = check_pair_lower(star_graph(3));
    CHECK(star[0].lhs == doctest::Approx(-1.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(all_hold(star));

    for (const Graph& g : {cycle_graph(5), complete_graph(6), cycle_graph(6)})
        CHECK(all_hold(check_pair_lower(g)));
}

TEST_CASE("pair upper audit shows the index discrepancy") {
    auto results = check_pair_upper_audit(cycle_graph(4));
    // the literal pairing fails at k = 1 and k = 3; the shifted one is clean
    std::vector<int> finding_ks;
    int findings_b = 0;
    for (const CheckResult& c : results) {
        REQUIRE(c.witness.pairing.has_value());
        if (*c.witness.pairing == "n-k+1" && !c.holds) {
            finding_ks.push_back(*c.witness.k);
            CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-9));
        }
        if (*c.witness.pairing == "n-k+2" && !c.holds) ++findings_b;
    }
    CHECK(finding_ks == std::vector<int>{1, 3});
    CHECK(findings_b == 0);

    // smallest case: both graphs on two vertices
    auto k2 = check_pair_upper_audit(complete_graph(2));
    for (const CheckResult& c : k2)
        if (*c.witness.pairing == "n-k+2") {
            CHECK(*c.witness.k == 2);
            CHECK(c.lhs == doctest::Approx(-1.0).epsilon(1e-9));
            CHECK(c.holds);
        }
}

TEST_CASE("minimum eigenvalue sum bound") {
    CheckResult star = check_min_sum(star_graph(3));
    CHECK(star.lhs == doctest::Approx(-std::sqrt(3.0) - 1.0).epsilon(1e-9));
    CHECK(star.rhs == doctest::Approx(-1.0 - 9.0 / 64.0).epsilon(1e-12));
    CHECK(star.holds);

    CheckResult c4 = check_min_sum(cycle_graph(4));
    CHECK(c4.lhs == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(c4.rhs == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c4.holds);

    CheckResult c5 = check_min_sum(cycle_graph(5));
    CHECK(c5.lhs ==
          doctest::Approx(4.0 * std::cos(4.0 * 3.14159265358979 / 5.0)).epsilon(1e-6));
    CHECK(c5.holds);
}

TEST_CASE("interlacing bound on the least eigenvalue") {
    CheckResult c4 = haemers_min_bound(cycle_graph(4), {0, 1});
    CHECK(c4.rhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c4.lhs == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(c4.holds);

    CheckResult k2 = haemers_min_bound(complete_graph(2), {0});
    CHECK(k2.rhs == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k2.lhs == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(k2.holds);

    CheckResult empty = haemers_min_bound(empty_graph(4), {1, 2});
    CHECK(empty.rhs == 0.0);
    CHECK(empty.lhs == 0.0);

    CHECK_THROWS_AS(haemers_min_bound(cycle_graph(4), {}), std::invalid_argument);
    CHECK_THROWS_AS(haemers_min_bound(cycle_graph(4), {0, 1, 2, 3}),
                    std::invalid_argument);

    // every bipartition of every graph on up to five vertices
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_bitmask(n, mask);
            Spectrum spec = graph_spectrum(g);
            for (std::uint32_t pick = 0; pick + 1 < (std::uint32_t{1} << (n - 1));
                 ++pick) {
                std::vector<int> v1{0};
                for (int u = 1; u < n; ++u)
                    if (pick & (std::uint32_t{1} << (u - 1))) v1.push_back(u);
                CHECK(haemers_min_bound(g, v1, spec, kDefaultCheckTol).holds);
            }
        }
    }
}

TEST_CASE("half-set split audit") {
    CheckResult c4 = lear_split(cycle_graph(4));
    CHECK(c4.lhs == 0.0);
    CHECK(c4.holds);

    CheckResult star3 = lear_split(star_graph(3));
    CHECK(star3.lhs == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(star3.rhs == 1.0);
    CHECK(star3.margin == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK_FALSE(star3.holds);
    REQUIRE(star3.witness.subset.has_value());
    CHECK(*star3.witness.subset == std::vector<int>{1, 2});
    REQUIRE(star3.witness.values.size() == 1);
    CHECK(star3.witness.values[0].first == "exhaustive_best");
    CHECK(star3.witness.values[0].second == 1.0);  // no 2-subset does better

    CheckResult star4 = lear_split(star_graph(4));
    CHECK(star4.rhs == 2.0);
    CHECK(star4.lhs == doctest::Approx(2.4).epsilon(1e-12));
    CHECK_FALSE(star4.holds);
}

TEST_CASE("tightness ratios") {
    TightnessRatios none = tightness_ratios(cycle_graph(5));
    CHECK_FALSE(none.upper_ratio.has_value());
    CHECK_FALSE(none.lower_ratio_paper_norm.has_value());

    TightnessRatios clique_plus =
        tightness_ratios(disjoint_union(complete_graph(10), empty_graph(1)));
    REQUIRE(clique_plus.upper_ratio.has_value());
    CHECK(*clique_plus.upper_ratio == doctest::Approx(0.2023).epsilon(1e-3));

    TightnessRatios nearly = tightness_ratios(complete_bipartite(100, 101));
    REQUIRE(nearly.lower_ratio_paper_norm.has_value());
    CHECK(*nearly.lower_ratio_paper_norm == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("spectral gap bound for edge differences") {
    auto same = pr1_gap_check(complete_graph(4), complete_graph(4), std::nullopt);
    CHECK(same[0].lhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(same[0].rhs == 0.0);
    CHECK(same[0].holds);

    Graph k4_minus = Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto gap = pr1_gap_check(complete_graph(4), k4_minus, std::nullopt);
    CHECK(gap[0].lhs ==
          doctest::Approx(3.0 - (1.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-9));
    CHECK(gap[0].rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(gap[0].holds);

    auto star = pr1_gap_check(star_graph(4), empty_graph(5), std::nullopt);
    CHECK(star[0].lhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(star[0].rhs == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(star[0].holds);

    auto bip = pr1_gap_check(complete_bipartite(2, 3), random_bipartite(2, 3, 0.4, 9),
                             BipartiteLayout{2});
    REQUIRE(bip.size() == 2);
    CHECK(bip[1].name == "pr1_bipartite");
    CHECK(bip[1].holds);

    CHECK_THROWS_AS(pr1_gap_check(complete_graph(3), complete_graph(4), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("spectral gap bound on seeded random pairs") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        Graph g1 = gnp_random(n, 0.3, rng());
        Graph g2 = gnp_random(n, 0.6, rng());
        CHECK(pr1_gap_check(g1, g2, std::nullopt)[0].holds);
    }
}

TEST_CASE("star closed-form audit") {
    auto audit = star_example_audit(10);
    REQUIRE(audit.size() == 2);
    // published s misses a factor of the leaf count
    CHECK_FALSE(audit[0].holds);
    CHECK(audit[0].witness.values[0].second ==
          doctest::Approx(2.0 * 10.0 * 9.0 / 11.0).epsilon(1e-9));
    CHECK(audit[0].witness.values[1].second ==
          doctest::Approx(2.0 * 9.0 / 11.0).epsilon(1e-12));
    // published pair sum is off by exactly -1
    CHECK_FALSE(audit[1].holds);
    CHECK(audit[1].witness.values[0].second ==
          doctest::Approx(-std::sqrt(10.0)).epsilon(1e-9));
    CHECK(audit[1].witness.values[1].second ==
          doctest::Approx(-1.0 - std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("exhaustive small corpus holds for the proved inequalities") {
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_bitmask(n, mask);
            Spectrum spec = graph_spectrum(g);
            Spectrum comp = graph_spectrum(g.complement());
            CHECK(all_hold(check_irregularity_bounds(g, spec, kDefaultCheckTol)));
            CHECK(all_hold(check_pair_lower(g, spec, comp, kDefaultCheckTol)));
            CHECK(check_min_sum(g, spec, comp, kDefaultCheckTol).holds);
            CHECK(
                all_hold(classical_bound_checks(g, std::nullopt, spec, kDefaultCheckTol)));
            for (const CheckResult& c :
                 check_pair_upper_audit(g, spec, comp, kDefaultCheckTol))
                if (*c.witness.pairing == "n-k+2") CHECK(c.holds);
        }
    }
}

TEST_CASE("blow-up scales the irregularity measure linearly") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = gnp_random(n, 0.5, rng());
        DegreeProfile p = degree_profile(g);
        double eps = graph_spectrum(g).values.front() - to_double(p.mean_degree);
        for (int t : {2, 3}) {
            Graph up = blow_up(g, t);
            double eps_up = graph_spectrum(up).values.front() -
                            to_double(degree_profile(up).mean_degree);
            CHECK(std::abs(eps_up - t * eps) <= 1e-8);
        }
    }
}
