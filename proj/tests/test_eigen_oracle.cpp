// Cross-checks the Jacobi solver against Eigen's SelfAdjointEigenSolver on
// random dense symmetric matrices. Eigen is used here only as an independent
// reference; the library itself never links it.
#include "doctest.h"

#include <random>

#include <Eigen/Eigenvalues>

#include <aspectra/eigen.hpp>

TEST_CASE("jacobi agrees with an independent dense solver") {
    std::mt19937 rng(20250101);
    std::uniform_real_distribution<double> entry(-10.0, 10.0);
    for (int n : {2, 3, 4, 7, 16, 33, 48}) {
        aspectra::SymMatrix b(n);
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = entry(rng);
                b.set(i, j, v);
                m(i, j) = v;
                m(j, i) = v;
            }
        const aspectra::EigenResult ours = aspectra::eigen_symmetric(b);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
        REQUIRE(ref.info() == Eigen::Success);
        const double scale = 1.0 + b.max_abs_entry();
        for (int i = 0; i < n; ++i) {
            const double expect = ref.eigenvalues()[n - 1 - i];  // ascending there
            CHECK(std::abs(ours.values[i] - expect) <= 1e-9 * scale);
        }
    }
}
