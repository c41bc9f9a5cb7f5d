#pragma once

#include <stdexcept>
#include <vector>

namespace aspectra {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix. Symmetry is structural: set() writes both
/// (i,j) and (j,i), so the two triangles can never drift apart.
class SymMatrix {
public:
    explicit SymMatrix(int order);

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);

    double trace() const;
    /// trace(B^2) computed entrywise as the sum of squared entries.
    double trace_of_square() const;
    double frobenius_norm() const;
    double max_abs_entry() const;
    bool is_nonnegative() const;

private:
    int n_;
    std::vector<double> a_;
};

struct EigenResult {
    /// Eigenvalues sorted descending.
    std::vector<double> values;
    /// max_i of the infinity norm of B v_i - lambda_i v_i over the computed pairs.
    double residual;
};

/// Cyclic Jacobi diagonalization. Sweeps until the off-diagonal Frobenius
/// mass falls below 1e-12 * ||B||_F, hard cap 100 sweeps. Throws SolverError
/// if the cap is hit or the eigenpair residual exceeds
/// 1e-10 * (1 + max|entry|).
EigenResult eigen_symmetric(const SymMatrix& B);

}  // namespace aspectra
