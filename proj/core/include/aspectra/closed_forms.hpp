#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace aspectra {

struct SrgInfeasibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SrgDegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SrgMultiplicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strongly regular graph parameters (n, r, a, c): r-regular on n vertices,
/// adjacent pairs share a common neighbours, non-adjacent pairs share c.
struct SrgParams {
    int n;
    int r;
    int a;
    int c;
};

/// Validates ranges and the counting identity r(r-a-1) = (n-r-1)c; throws
/// SrgInfeasibleError otherwise.
void validate(const SrgParams& p);

/// Closed-form generalized-adjacency spectrum of a strongly regular graph:
/// r (simple) plus the two roots of x^2 - Bx - C = 0.
struct SrgSpectrum {
    double alpha;
    double r_eig;    ///< eigenvalue r, multiplicity 1
    double B;        ///< 2*r*alpha + (1-alpha)(a-c)
    double C;        ///< (r-c)(1-alpha)^2 - r*alpha*(1-alpha)(a-c) - r^2*alpha^2
    double d;        ///< discriminant B^2 + 4C
    double theta1;   ///< (B + sqrt(d)) / 2
    double theta2;   ///< (B - sqrt(d)) / 2
    int m1;          ///< multiplicity of theta1
    int m2;          ///< multiplicity of theta2
};

/// Evaluates the closed form at alpha in [0,1). Multiplicities are obtained
/// by solving m1 + m2 = n-1, m1*theta1 + m2*theta2 = 2*alpha*m - r and must
/// round to integers within 1e-6. Throws SrgDegenerateError when the
/// discriminant collapses (theta1 = theta2) and SrgMultiplicityError when the
/// solved multiplicities are not integral.
SrgSpectrum srg_alpha_spectrum(const SrgParams& p, double alpha);

/// {(n-1, 1), (alpha*n - 1, n-1)}.
std::vector<std::pair<double, int>> complete_alpha_spectrum(int n, double alpha);

/// Spectrum of k disjoint single edges: {(1, k), (2*alpha - 1, k)}.
std::vector<std::pair<double, int>> matching_union_alpha_spectrum(int k, double alpha);

/// Spectrum of the balanced complete bipartite graph on n = 2*half vertices:
/// {(n/2, 1), (n*(2*alpha-1)/2, 1), (n*alpha/2, n-2)}.
std::vector<std::pair<double, int>> balanced_bipartite_alpha_spectrum(int half, double alpha);

}  // namespace aspectra
