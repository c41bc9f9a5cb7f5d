#include <aspectra/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aspectra {

namespace {
constexpr double kOffDiagRelTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr int kMaxSweeps = 100;
}  // namespace

SymMatrix::SymMatrix(int order) : n_(order) {
    if (order <= 0) throw std::invalid_argument("SymMatrix: order must be positive");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymMatrix::set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::trace_of_square() const {
    double t = 0.0;
    for (double v : a_) t += v * v;
    return t;
}

double SymMatrix::frobenius_norm() const {
    return std::sqrt(trace_of_square());
}

double SymMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool SymMatrix::is_nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return v >= 0.0; });
}

EigenResult eigen_symmetric(const SymMatrix& B) {
    const int n = B.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = B(i, j);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    auto off_mass = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * at(a, i, j) * at(a, i, j);
        return std::sqrt(s);
    };

    // ||B||_F is invariant under the rotations, so the initial norm anchors
    // the relative termination threshold for every sweep.
    const double threshold = kOffDiagRelTol * B.frobenius_norm();
    bool converged = off_mass() <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                at(a, p, p) -= t * apq;
                at(a, q, q) += t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(a, r, p);
                    const double arq = at(a, r, q);
                    at(a, r, p) = c * arp - s * arq;
                    at(a, p, r) = at(a, r, p);
                    at(a, r, q) = s * arp + c * arq;
                    at(a, q, r) = at(a, r, q);
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = at(v, r, p);
                    const double vrq = at(v, r, q);
                    at(v, r, p) = c * vrp - s * vrq;
                    at(v, r, q) = s * vrp + c * vrq;
                }
            }
        converged = off_mass() <= threshold;
    }
    if (!converged)
        throw SolverError("eigen_symmetric: off-diagonal mass above threshold after 100 sweeps");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return at(a, i, i) > at(a, j, j); });

    EigenResult result;
    result.values.reserve(n);
    for (int i : idx) result.values.push_back(at(a, i, i));

    double residual = 0.0;
    for (int col = 0; col < n; ++col) {
        const int j = idx[col];
        const double lambda = result.values[col];
        for (int i = 0; i < n; ++i) {
            double bv = 0.0;
            for (int r = 0; r < n; ++r) bv += B(i, r) * at(v, r, j);
            residual = std::max(residual, std::abs(bv - lambda * at(v, i, j)));
        }
    }
    result.residual = residual;
    if (residual > kResidualTol * (1.0 + B.max_abs_entry()))
        throw SolverError("eigen_symmetric: eigenpair residual exceeds tolerance");
    return result;
}

}  // namespace aspectra
