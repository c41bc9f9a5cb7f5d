#include <aspectra/closed_forms.hpp>

#include <cmath>
#include <string>

namespace aspectra {

namespace {
constexpr double kDegenerateTol = 1e-12;
constexpr double kIntegralityTol = 1e-6;
constexpr double kRootCheckTol = 1e-10;
constexpr double kTraceTol = 1e-8;
}  // namespace

void validate(const SrgParams& p) {
    if (p.n < 2 || p.r < 1 || p.a < 0 || p.c < 0)
        throw SrgInfeasibleError("srg: parameters out of range");
    if (p.r >= p.n)
        throw SrgInfeasibleError("srg: degree must be below the order");
    if (p.a > p.r - 1)
        throw SrgInfeasibleError("srg: common neighbours of adjacent pairs exceed r-1");
    if (p.c > p.r)
        throw SrgInfeasibleError("srg: common neighbours of non-adjacent pairs exceed r");
    const long long lhs = static_cast<long long>(p.r) * (p.r - p.a - 1);
    const long long rhs = static_cast<long long>(p.n - p.r - 1) * p.c;
    if (lhs != rhs)
        throw SrgInfeasibleError("srg: counting identity r(r-a-1) = (n-r-1)c fails (" +
                                 std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
}

SrgSpectrum srg_alpha_spectrum(const SrgParams& p, double alpha) {
    validate(p);
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("srg_alpha_spectrum: alpha must lie in [0,1)");

    const double n = p.n, r = p.r, a = p.a, c = p.c;
    const double m = n * r / 2.0;

    SrgSpectrum out;
    out.alpha = alpha;
    out.r_eig = r;
    out.B = 2.0 * r * alpha + (1.0 - alpha) * (a - c);
    out.C = (r - c) * (1.0 - alpha) * (1.0 - alpha)
            - r * alpha * (1.0 - alpha) * (a - c)
            - r * r * alpha * alpha;
    out.d = out.B * out.B + 4.0 * out.C;
    if (out.d < kDegenerateTol)
        throw SrgDegenerateError("srg_alpha_spectrum: discriminant collapsed, multiplicity split undefined");
    const double sq = std::sqrt(out.d);
    out.theta1 = (out.B + sq) / 2.0;
    out.theta2 = (out.B - sq) / 2.0;

    // Multiplicities from m1 + m2 = n - 1 and the trace condition
    // m1*theta1 + m2*theta2 = 2*alpha*m - r.
    const double target = 2.0 * alpha * m - r;
    const double m1_real = (target - (n - 1.0) * out.theta2) / (out.theta1 - out.theta2);
    const double m2_real = (n - 1.0) - m1_real;
    const double m1_rounded = std::round(m1_real);
    const double m2_rounded = std::round(m2_real);
    if (std::abs(m1_real - m1_rounded) > kIntegralityTol ||
        std::abs(m2_real - m2_rounded) > kIntegralityTol ||
        m1_rounded < 0.0 || m2_rounded < 0.0)
        throw SrgMultiplicityError("srg_alpha_spectrum: multiplicities do not solve to integers (" +
                                   std::to_string(m1_real) + ", " + std::to_string(m2_real) + ")");
    out.m1 = static_cast<int>(m1_rounded);
    out.m2 = static_cast<int>(m2_rounded);

    for (double theta : {out.theta1, out.theta2}) {
        const double res = theta * theta - out.B * theta - out.C;
        if (std::abs(res) > kRootCheckTol * (1.0 + std::abs(out.C)))
            throw SrgMultiplicityError("srg_alpha_spectrum: root fails its quadratic");
    }
    const double trace = r + out.m1 * out.theta1 + out.m2 * out.theta2;
    if (std::abs(trace - 2.0 * alpha * m) > kTraceTol)
        throw SrgMultiplicityError("srg_alpha_spectrum: trace identity violated");
    return out;
}

std::vector<std::pair<double, int>> complete_alpha_spectrum(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("complete_alpha_spectrum: order must be positive");
    if (n == 1) return {{0.0, 1}};
    return {{n - 1.0, 1}, {alpha * n - 1.0, n - 1}};
}

std::vector<std::pair<double, int>> matching_union_alpha_spectrum(int k, double alpha) {
    if (k < 1) throw std::invalid_argument("matching_union_alpha_spectrum: copy count must be positive");
    return {{1.0, k}, {2.0 * alpha - 1.0, k}};
}

std::vector<std::pair<double, int>> balanced_bipartite_alpha_spectrum(int half, double alpha) {
    if (half < 1) throw std::invalid_argument("balanced_bipartite_alpha_spectrum: part size must be positive");
    const double n = 2.0 * half;
    std::vector<std::pair<double, int>> out{{n / 2.0, 1}, {n * (2.0 * alpha - 1.0) / 2.0, 1}};
    if (half > 1) out.emplace_back(n * alpha / 2.0, 2 * half - 2);
    return out;
}

}  // namespace aspectra
