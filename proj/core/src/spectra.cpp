#include <aspectra/spectra.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace aspectra {

namespace {
constexpr double kIdentityTol = 1e-8;
}

SymMatrix build_alpha_matrix(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("build_alpha_matrix: alpha must lie in [0,1]");
    const int n = g.order();
    SymMatrix B(n);
    for (int i = 0; i < n; ++i) B.set(i, i, alpha * g.degree(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) B.set(i, j, 1.0 - alpha);
    return B;
}

SymMatrix build_signless_laplacian(const Graph& g) {
    const int n = g.order();
    SymMatrix Q(n);
    for (int i = 0; i < n; ++i) Q.set(i, i, static_cast<double>(g.degree(i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) Q.set(i, j, 1.0);
    return Q;
}

Spectrum spectrum(const Graph& g, double alpha) {
    const int n = g.order();
    const double m = g.size();
    const EigenResult eig = eigen_symmetric(build_alpha_matrix(g, alpha));

    Spectrum sp;
    sp.alpha = alpha;
    sp.p = eig.values;
    sp.mean_shift = 2.0 * alpha * m / n;
    sp.eta.reserve(n);
    for (double pi : sp.p) sp.eta.push_back(pi - sp.mean_shift);
    sp.s.reserve(n);
    for (double e : sp.eta) sp.s.push_back(std::abs(e));
    std::sort(sp.s.begin(), sp.s.end(), std::greater<>());
    sp.energy = 0.0;
    for (double si : sp.s) sp.energy += si;

    double sum_p = 0.0, sum_p2 = 0.0, sum_eta2 = 0.0;
    for (double pi : sp.p) {
        sum_p += pi;
        sum_p2 += pi * pi;
    }
    for (double e : sp.eta) sum_eta2 += e * e;
    const double m1 = static_cast<double>(g.zagreb_m1());
    const double want_p = 2.0 * alpha * m;
    const double want_p2 = alpha * alpha * m1 + (1.0 - alpha) * (1.0 - alpha) * 2.0 * m;
    const double want_eta2 = want_p2 - 4.0 * alpha * alpha * m * m / n;
    if (std::abs(sum_p - want_p) > kIdentityTol ||
        std::abs(sum_p2 - want_p2) > kIdentityTol ||
        std::abs(sum_eta2 - want_eta2) > kIdentityTol)
        throw InvariantError("spectrum: moment identity violated (trace " +
                             std::to_string(sum_p - want_p) + ", square " +
                             std::to_string(sum_p2 - want_p2) + ", centered " +
                             std::to_string(sum_eta2 - want_eta2) + ")");
    return sp;
}

double default_cluster_tol(double p1) {
    return 1e-8 * (1.0 + std::abs(p1));
}

std::vector<std::pair<double, int>> cluster_descending(const std::vector<double>& values, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("cluster_descending: tol must be positive");
    std::vector<std::pair<double, int>> clusters;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j - 1] - values[j] <= tol) {
            sum += values[j];
            ++j;
        }
        clusters.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return clusters;
}

std::vector<std::pair<double, int>> distinct_eigenvalues(const Spectrum& sp, double tol) {
    return cluster_descending(sp.p, tol);
}

std::vector<std::pair<double, int>> distinct_eigenvalues(const Spectrum& sp) {
    return cluster_descending(sp.p, default_cluster_tol(sp.p.empty() ? 0.0 : sp.p.front()));
}

double spectral_radius(const Graph& g, double alpha) {
    const Spectrum sp = spectrum(g, alpha);
    const double mean_degree = 2.0 * g.size() / g.order();
    if (sp.p.front() < mean_degree - kIdentityTol)
        throw InvariantError("spectral_radius: p1 below mean degree");
    return sp.p.front();
}

}  // namespace aspectra
