#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "degdev/graph.hpp"

namespace degdev {

class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n)
        : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    int size() const { return n_; }
    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

SymmetricMatrix adjacency_matrix(const Graph& g);

// Eigenvalues sorted descending plus the off-diagonal Frobenius norm left at
// convergence.
struct Spectrum {
    std::vector<double> values;
    double residual = 0.0;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double residual, int sweeps)
        : std::runtime_error("eigensolver failed to converge after " +
                             std::to_string(sweeps) +
                             " sweeps, residual " + std::to_string(residual)),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kDefaultSweepCap = 100;

// Cyclic-by-row Jacobi. Rotations with |a_pq| below a per-entry threshold are
// skipped; a sweep pass ends when the off-diagonal Frobenius norm drops to
// tol * (1 + ||A||_F). Deterministic for a fixed input.
Spectrum eigenvalues_symmetric(SymmetricMatrix a, double tol = kDefaultEigenTol,
                               int sweep_cap = kDefaultSweepCap);

Spectrum graph_spectrum(const Graph& g);

// Spectrum of the t-fold blow-up of a graph whose spectrum is given:
// every value scaled by t, plus n(t-1) zeros.
Spectrum predicted_blow_up_spectrum(const Spectrum& spec, int n, int t);

// Closed variant: t*mu + t - 1 for each value, plus n(t-1) copies of -1.
Spectrum predicted_closed_blow_up_spectrum(const Spectrum& spec, int n, int t);

struct ClassicalBounds {
    double mu = 0.0;
    double hofmeister_lower = 0.0;    // sqrt(mean of squared degrees)
    double stanley_upper = 0.0;       // -1/2 + sqrt(2m + 1/4)
    double berman_zhang_upper = 0.0;  // max over edges of sqrt(d(u) d(v)); 0 if no edges
    std::optional<double> cvetkovic_upper;  // sqrt(m), bipartite only
    std::optional<double> rayleigh_lower;   // m / sqrt(ab), bipartite only
};

ClassicalBounds classical_bounds(const Graph& g,
                                 const std::optional<BipartiteLayout>& layout,
                                 double mu);
ClassicalBounds classical_bounds(const Graph& g,
                                 const std::optional<BipartiteLayout>& layout = {});

}  // namespace degdev
