#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degdev/graph.hpp"
#include "degdev/spectra.hpp"

namespace degdev {

inline constexpr double kDefaultCheckTol = 1e-8;

// Optional payload identifying the instance a check ran on; everything a
// report needs to be self-contained.
struct Witness {
    std::optional<int> k;
    std::optional<std::string> pairing;       // complement pairing: "n-k+1" or "n-k+2"
    std::optional<std::vector<int>> subset;
    std::vector<std::pair<std::string, double>> values;
};

// One inequality instance written as lhs <= rhs. margin = rhs - lhs;
// holds <=> margin >= -tol. A failed audit check is a reportable finding,
// not an error.
struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool holds = true;
    double tol = 0.0;
    Witness witness;
};

CheckResult make_check(std::string name, double lhs, double rhs, double tol,
                       Witness witness = {});

// Lower bounds var/(2*sqrt(2m)) and s^2/(2n^2 sqrt(2m)) on mu - 2m/n, the
// upper bound sqrt(s), and the exact chain s^2/n^2 <= var <= s.
std::vector<CheckResult> check_irregularity_bounds(const Graph& g,
                                                   const Spectrum& spec, double tol);
std::vector<CheckResult> check_irregularity_bounds(const Graph& g,
                                                   double tol = kDefaultCheckTol);

// s2^2/(2n^2 sqrt(ab)) <= mu - m/sqrt(ab) <= sqrt(s2/2).
std::vector<CheckResult> check_bipartite_bounds(const Graph& g,
                                                const BipartiteLayout& layout,
                                                const Spectrum& spec, double tol);
std::vector<CheckResult> check_bipartite_bounds(const Graph& g,
                                                const BipartiteLayout& layout,
                                                double tol = kDefaultCheckTol);

// mu_k(G) + mu_{n-k+1}(comp) >= -1 - 2*sqrt(2 s(G)) for k = 1..n-1.
std::vector<CheckResult> check_pair_lower(const Graph& g, const Spectrum& spec,
                                          const Spectrum& comp_spec, double tol);
std::vector<CheckResult> check_pair_lower(const Graph& g,
                                          double tol = kDefaultCheckTol);

// Audits the claimed upper bound mu_k(G) + mu_j(comp) <= -1 under both index
// pairings: j = n-k+1 for k = 1..n-1, and j = n-k+2 for k = 2..n. Violations
// are findings, recorded per pairing and k.
std::vector<CheckResult> check_pair_upper_audit(const Graph& g, const Spectrum& spec,
                                                const Spectrum& comp_spec, double tol);
std::vector<CheckResult> check_pair_upper_audit(const Graph& g,
                                                double tol = kDefaultCheckTol);

// mu_n(G) + mu_n(comp) <= -1 - s^2/n^3.
CheckResult check_min_sum(const Graph& g, const Spectrum& spec,
                          const Spectrum& comp_spec, double tol);
CheckResult check_min_sum(const Graph& g, double tol = kDefaultCheckTol);

// Interlacing bound on the least eigenvalue from a vertex bipartition.
CheckResult haemers_min_bound(const Graph& g, const std::vector<int>& v1,
                              const Spectrum& spec, double tol);
CheckResult haemers_min_bound(const Graph& g, const std::vector<int>& v1,
                              double tol = kDefaultCheckTol);

// Splits off the floor(n/2) lowest-degree vertices S (ties by index) and
// audits e(V\S) - e(S) >= s/2. For n up to exhaustive_cap the witness also
// carries the best value over every floor(n/2)-subset.
CheckResult lear_split(const Graph& g, double tol = kDefaultCheckTol,
                       int exhaustive_cap = 14);

struct TightnessRatios {
    std::optional<double> upper_ratio;            // (mu - 2m/n) / sqrt(s)
    std::optional<double> lower_ratio_paper_norm; // (mu - 2m/n) n^2 sqrt(m) / s^2
};

TightnessRatios tightness_ratios(const Graph& g, const Spectrum& spec);
TightnessRatios tightness_ratios(const Graph& g);

// mu(g1) - mu(g2) <= sqrt(2 |E(g1) \ E(g2)|); when both graphs fit one
// bipartite layout the sharper sqrt(|E(g1) \ E(g2)|) variant is added.
std::vector<CheckResult> pr1_gap_check(const Graph& g1, const Graph& g2,
                                       const std::optional<BipartiteLayout>& layout,
                                       double tol = kDefaultCheckTol);

// Classical spectral-radius bounds as check results (bipartite entries only
// when a layout is given).
std::vector<CheckResult> classical_bound_checks(const Graph& g,
                                                const std::optional<BipartiteLayout>& layout,
                                                const Spectrum& spec, double tol);

// Compares the published closed forms for stars against computed values:
// the deviation s(K_{1,leaves}) and the extreme pair sum
// mu_min(star) + mu_2(complement). Mismatches are findings.
std::vector<CheckResult> star_example_audit(int leaves,
                                            double tol = kDefaultCheckTol);

}  // namespace degdev
