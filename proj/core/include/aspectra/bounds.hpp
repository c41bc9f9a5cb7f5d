#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <aspectra/graph.hpp>
#include <aspectra/spectra.hpp>

namespace aspectra {

/// Named deviation-sequence shapes that characterize the equality cases of
/// the energy bounds. A shape is only assigned when the deviations take at
/// most two values h >= k (t of them at level h).
enum class ShapeClass {
    None,
    TwoLevelEqual,          ///< all deviations equal and positive
    CompleteGraph,          ///< spectrum {n-1, (alpha*n-1)^(n-1)}
    MatchingUnion,          ///< spectrum {1^(n/2), (2*alpha-1)^(n/2)}
    BalancedBipartite,      ///< spectrum {n/2, (alpha*n/2)^(n-2), n(2*alpha-1)/2}
    FourValueRegularRadius, ///< deviations +-h, +-k with h = (2m/n)(1-alpha), k = 1-alpha
    FourValueLargeRadius,   ///< deviations +-h, +-k with h above (2m/n)(1-alpha)
    ThreeValueZero,         ///< deviations +-h and 0 with h above (2m/n)(1-alpha)
};

std::string_view to_string(ShapeClass c);

struct SpectrumShape {
    std::vector<std::pair<double, int>> clusters;  ///< distinct eigenvalues
    double h = 0.0;  ///< larger deviation level
    double k = 0.0;  ///< smaller deviation level
    int t = 1;       ///< count of deviations at level h
    ShapeClass classification = ShapeClass::None;
};

/// One evaluated bound inside a BoundReport. `slack` is always
/// measured - value, so lower bounds are satisfied when slack >= -1e-8 and
/// upper bounds when slack <= 1e-8. `equality` requires both |slack| <= 1e-8
/// and the structural confirmation of the bound's extremal family, so a
/// floating-point near-tie cannot masquerade as a theorem equality case.
struct BoundValue {
    std::string name;
    bool is_upper = false;
    bool applicable = false;
    std::string reason;     ///< why not applicable; empty otherwise
    double value = 0.0;
    double measured = 0.0;  ///< energy, Zagreb index, or spectral radius
    bool satisfied = true;
    double slack = 0.0;
    bool equality = false;
};

/// Every implemented energy/degree bound for one (graph, alpha) pair.
struct BoundReport {
    double alpha = 0.0;
    double y = 0.0;            ///< alpha^2*M1 + (1-alpha)^2*2m - 4*alpha^2*m^2/n
    double c_threshold = 0.0;  ///< the deviation-cap constant c
    double energy = 0.0;
    SpectrumShape shape;
    std::vector<BoundValue> bounds;

    const BoundValue* find(std::string_view name) const;
};

/// Closed-form value of the centered second moment sum eta_i^2.
double moment_y(const Graph& g, double alpha);

/// The constant c = m{alpha^2 n^3 + n^2(2-4a-a^2) + n(4a-2-2a^2 m) + 4a^2 m}
/// whose root caps s_1 via the trace bound; may be negative off-hypothesis.
double c_threshold(const Graph& g, double alpha);

/// sqrt(2y); strict for connected graphs away from the two-equal-deviation
/// boundary shapes. Requires connected g, n >= 2, m >= 1, alpha in [0,1).
double lower_bound_strict(const Graph& g, double alpha);

/// 2*sqrt(y*n)*sqrt(s1*sn)/(s1+sn). Requires n >= 2, m >= 1, alpha in [0,1)
/// and s1 + sn > 0.
double lower_bound_two_level(const Graph& g, double alpha);
double lower_bound_two_level(const Graph& g, const Spectrum& sp);

/// Matches the deviation sequence and eigenvalue clusters against the named
/// equality-case templates.
SpectrumShape classify_equality_shape(const Spectrum& sp, const Graph& g);

/// Premise s_n >= sqrt(c)/(2n); bound (2*sqrt(2)/3)*sqrt(((1-a)^2*2m +
/// (a^2/2)(Delta-delta)^2)*n). Requires connected g, n >= 3, m >= 2.
std::pair<bool, double> lower_bound_sn_large(const Graph& g, double alpha);
std::pair<bool, double> lower_bound_sn_large(const Graph& g, const Spectrum& sp);

/// Premise s_n >= sqrt(c)/n^3; bound (2n/(1+n^2))*sqrt(same radicand);
/// always strict.
std::pair<bool, double> lower_bound_sn_small(const Graph& g, double alpha);
std::pair<bool, double> lower_bound_sn_small(const Graph& g, const Spectrum& sp);

/// Premise s_n = 0; bound y/s_1. Requires connected g.
std::pair<bool, double> lower_bound_sn_zero(const Graph& g, double alpha);
std::pair<bool, double> lower_bound_sn_zero(const Graph& g, const Spectrum& sp);

/// Degree-based refinement under s_n = 0: (1-alpha)*n for regular graphs,
/// ((1-alpha)^2*2m + (alpha^2/2)(Delta-delta)^2)/(Delta - 2*alpha*m/n)
/// (strict) otherwise. Returns (regular_branch, bound).
std::pair<bool, double> lower_bound_sn_zero_degree(const Graph& g, double alpha);
std::pair<bool, double> lower_bound_sn_zero_degree(const Graph& g, const Spectrum& sp);

/// Regular-graph lower bound: (1-alpha)*n when s_n = 0, else
/// 2*(1-alpha)*n*r*sqrt(s_n)/(r+s_n).
double lower_bound_regular(const Graph& g, double alpha);
double lower_bound_regular(const Graph& g, const Spectrum& sp);

/// sqrt(y/n) + sqrt((n-1)(y - y/n)); applies to every graph.
double upper_bound_main(const Graph& g, double alpha);

/// n*sqrt(2m(1-alpha)^2/n + (alpha^2/4)(Delta-delta)^2); connected graphs.
double upper_bound_zagreb(const Graph& g, double alpha);

/// n*(1-alpha)*sqrt(2m/n); regular graphs.
double upper_bound_regular(const Graph& g, double alpha);

/// Degree-sequence bounds on the first Zagreb index M1 for connected graphs:
///   lower        = 4m^2/n + (Delta-delta)^2/2
///   upper_size   = m*(2m/(n-1) + n - 2)
///   upper_spread = 4m^2/n + (n/4)(Delta-delta)^2
struct ZagrebBounds {
    double lower;
    double upper_size;
    double upper_spread;
};
ZagrebBounds zagreb_bounds(const Graph& g);

/// tr-based cap on the largest eigenvalue of an entrywise non-negative
/// symmetric matrix of order >= 3: a/n + sqrt((n-1)/n * (b - a^2/n)) with
/// a = tr(B), b = tr(B^2).
double trace_radius_bound(const SymMatrix& B);

/// For descending non-negative a: sum a_i (a_1 + a_n) >= sum a_i^2 + n a_1 a_n,
/// checked within 1e-12. Rejects unsorted or negative input.
bool ordered_sum_inequality(const std::vector<double>& a);

BoundReport full_report(const Graph& g, double alpha);
BoundReport full_report(const Graph& g, const Spectrum& sp);

}  // namespace aspectra
