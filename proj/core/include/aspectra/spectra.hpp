#pragma once

#include <utility>
#include <vector>

#include <aspectra/eigen.hpp>
#include <aspectra/graph.hpp>

namespace aspectra {

/// Thrown when a computed spectrum violates one of the exact identities it
/// must satisfy (signals a solver bug, not bad input).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full spectral data of the generalized adjacency matrix
/// alpha*D + (1-alpha)*A at one alpha.
struct Spectrum {
    double alpha = 0.0;
    /// Eigenvalues p_1 >= ... >= p_n.
    std::vector<double> p;
    /// Eigenvalue mean 2*alpha*m/n.
    double mean_shift = 0.0;
    /// eta_i = p_i - mean_shift, in eigenvalue order.
    std::vector<double> eta;
    /// Deviations s_i = |eta_i| sorted descending.
    std::vector<double> s;
    /// Energy = sum of deviations.
    double energy = 0.0;
};

/// alpha*D(G) + (1-alpha)*A(G); rejects alpha outside [0,1].
SymMatrix build_alpha_matrix(const Graph& g, double alpha);

/// D(G) + A(G), built directly from degrees and adjacency. Kept separate from
/// build_alpha_matrix so energy-merging checks have an independent route.
SymMatrix build_signless_laplacian(const Graph& g);

/// Computes the spectrum and asserts the three moment identities
///   sum p_i   = 2*alpha*m
///   sum p_i^2 = alpha^2*M1 + (1-alpha)^2*2m
///   sum eta_i^2 = alpha^2*M1 + (1-alpha)^2*2m - 4*alpha^2*m^2/n
/// within 1e-8 before returning; throws InvariantError otherwise.
Spectrum spectrum(const Graph& g, double alpha);

/// Relative clustering tolerance anchored to the spectral radius.
double default_cluster_tol(double p1);

/// Clusters a descending sequence by maximal runs with gap <= tol; returns
/// (cluster mean, multiplicity) pairs. Multiplicities sum to the input size.
std::vector<std::pair<double, int>> cluster_descending(const std::vector<double>& values, double tol);

std::vector<std::pair<double, int>> distinct_eigenvalues(const Spectrum& sp, double tol);
std::vector<std::pair<double, int>> distinct_eigenvalues(const Spectrum& sp);

/// Largest eigenvalue p_1; asserts p_1 >= 2m/n - 1e-8.
double spectral_radius(const Graph& g, double alpha);

}  // namespace aspectra
