#include "degdev/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace degdev {

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
    return a;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[static_cast<std::size_t>(i) * n + j];
            sum += x * x;
        }
    return std::sqrt(2.0 * sum);
}

double frobenius_norm(const std::vector<double>& a) {
    double sum = 0.0;
    for (double x : a) sum += x * x;
    return std::sqrt(sum);
}

}  // namespace

Spectrum eigenvalues_symmetric(SymmetricMatrix m, double tol, int sweep_cap) {
    if (tol <= 0.0) throw std::invalid_argument("eigensolver tolerance must be positive");
    const int n = m.size();
    auto& a = m.data();

    const double target = tol * (1.0 + frobenius_norm(a));
    // If every off-diagonal entry sits below this, the off-norm is below target.
    const double skip =
        n > 1 ? target / std::sqrt(static_cast<double>(n) * (n - 1)) : 0.0;

    double off = off_diagonal_norm(a, n);
    int sweeps = 0;
    while (off > target) {
        if (sweeps == sweep_cap) throw ConvergenceError(off, sweeps);
        ++sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (std::abs(apq) <= skip) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[static_cast<std::size_t>(i) * n + p];
                    const double aiq = a[static_cast<std::size_t>(i) * n + q];
                    const double nip = c * aip - s * aiq;
                    const double niq = s * aip + c * aiq;
                    a[static_cast<std::size_t>(i) * n + p] = nip;
                    a[static_cast<std::size_t>(p) * n + i] = nip;
                    a[static_cast<std::size_t>(i) * n + q] = niq;
                    a[static_cast<std::size_t>(q) * n + i] = niq;
                }
            }
        }
        off = off_diagonal_norm(a, n);
    }

    Spectrum spec;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(spec.values.begin(), spec.values.end(), std::greater<double>());
    spec.residual = off;
    return spec;
}

Spectrum graph_spectrum(const Graph& g) {
    return eigenvalues_symmetric(adjacency_matrix(g));
}

Spectrum predicted_blow_up_spectrum(const Spectrum& spec, int n, int t) {
    if (static_cast<int>(spec.values.size()) != n)
        throw std::invalid_argument("spectrum length does not match vertex count");
    if (t < 1) throw std::invalid_argument("blow-up factor must be positive");
    Spectrum out;
    out.values.reserve(static_cast<std::size_t>(n) * t);
    for (double v : spec.values) out.values.push_back(t * v);
    out.values.insert(out.values.end(), static_cast<std::size_t>(n) * (t - 1), 0.0);
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    out.residual = t * spec.residual;
    return out;
}

Spectrum predicted_closed_blow_up_spectrum(const Spectrum& spec, int n, int t) {
    if (static_cast<int>(spec.values.size()) != n)
        throw std::invalid_argument("spectrum length does not match vertex count");
    if (t < 1) throw std::invalid_argument("blow-up factor must be positive");
    Spectrum out;
    out.values.reserve(static_cast<std::size_t>(n) * t);
    for (double v : spec.values) out.values.push_back(t * v + (t - 1));
    out.values.insert(out.values.end(), static_cast<std::size_t>(n) * (t - 1), -1.0);
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    out.residual = t * spec.residual;
    return out;
}

ClassicalBounds classical_bounds(const Graph& g,
                                 const std::optional<BipartiteLayout>& layout,
                                 double mu) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    ClassicalBounds b;
    b.mu = mu;

    double deg_sq = 0.0;
    for (int u = 0; u < n; ++u) {
        double d = g.degree(u);
        deg_sq += d * d;
    }
    b.hofmeister_lower = std::sqrt(deg_sq / n);
    b.stanley_upper = -0.5 + std::sqrt(2.0 * m + 0.25);

    double bz = 0.0;
    for (const Edge& e : g.edges())
        bz = std::max(bz, std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v)));
    b.berman_zhang_upper = bz;

    if (layout) {
        layout->require_valid(g);
        const double a = layout->a;
        const double bb = n - layout->a;
        b.cvetkovic_upper = std::sqrt(static_cast<double>(m));
        b.rayleigh_lower = m / std::sqrt(a * bb);
    }
    return b;
}

ClassicalBounds classical_bounds(const Graph& g,
                                 const std::optional<BipartiteLayout>& layout) {
    return classical_bounds(g, layout, graph_spectrum(g).values.front());
}

}  // namespace degdev
