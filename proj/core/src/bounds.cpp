#include <aspectra/bounds.hpp>

#include <algorithm>
#include <cmath>

namespace aspectra {

namespace {

constexpr double kEqTol = 1e-8;
constexpr double kStrictTol = 1e-12;

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

double spread_radicand(const Graph& g, double alpha) {
    const double dd = g.max_degree() - g.min_degree();
    return (1.0 - alpha) * (1.0 - alpha) * 2.0 * g.size() + alpha * alpha / 2.0 * dd * dd;
}

/// Exactly two positive deviations, equal within tolerance: the shape on
/// which (sum s_i)^2 = 2 sum s_i^2 holds and the sqrt(2y) bound is attained.
bool two_equal_deviations(const Spectrum& sp) {
    const double tol = default_cluster_tol(sp.s.empty() ? 0.0 : sp.s.front());
    int positive = 0;
    for (double si : sp.s)
        if (si > tol) ++positive;
    return positive == 2 && std::abs(sp.s[0] - sp.s[1]) <= tol;
}

}  // namespace

std::string_view to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::None: return "none";
        case ShapeClass::TwoLevelEqual: return "two_level_equal";
        case ShapeClass::CompleteGraph: return "complete_graph";
        case ShapeClass::MatchingUnion: return "matching_union";
        case ShapeClass::BalancedBipartite: return "balanced_bipartite";
        case ShapeClass::FourValueRegularRadius: return "four_value_regular_radius";
        case ShapeClass::FourValueLargeRadius: return "four_value_large_radius";
        case ShapeClass::ThreeValueZero: return "three_value_zero";
    }
    return "none";
}

const BoundValue* BoundReport::find(std::string_view name) const {
    for (const auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

double moment_y(const Graph& g, double alpha) {
    const double n = g.order(), m = g.size();
    const double m1 = static_cast<double>(g.zagreb_m1());
    return alpha * alpha * m1 + (1.0 - alpha) * (1.0 - alpha) * 2.0 * m -
           4.0 * alpha * alpha * m * m / n;
}

double c_threshold(const Graph& g, double alpha) {
    const double n = g.order(), m = g.size(), a = alpha;
    return m * (a * a * n * n * n + n * n * (2.0 - 4.0 * a - a * a) +
                n * (4.0 * a - 2.0 - 2.0 * a * a * m) + 4.0 * a * a * m);
}

double lower_bound_strict(const Graph& g, double alpha) {
    require(alpha >= 0.0 && alpha < 1.0, "lower_bound_strict: alpha must lie in [0,1)");
    require(g.order() >= 2 && g.size() >= 1, "lower_bound_strict: needs n >= 2 and m >= 1");
    require(is_connected(g), "lower_bound_strict: graph must be connected");
    return std::sqrt(2.0 * moment_y(g, alpha));
}

double lower_bound_two_level(const Graph& g, const Spectrum& sp) {
    require(sp.alpha >= 0.0 && sp.alpha < 1.0, "lower_bound_two_level: alpha must lie in [0,1)");
    require(g.order() >= 2 && g.size() >= 1, "lower_bound_two_level: needs n >= 2 and m >= 1");
    const double s1 = sp.s.front(), sn = sp.s.back();
    require(s1 + sn > kStrictTol, "lower_bound_two_level: deviations vanish");
    return 2.0 * std::sqrt(moment_y(g, sp.alpha) * g.order()) * std::sqrt(s1 * sn) / (s1 + sn);
}

double lower_bound_two_level(const Graph& g, double alpha) {
    return lower_bound_two_level(g, spectrum(g, alpha));
}

SpectrumShape classify_equality_shape(const Spectrum& sp, const Graph& g) {
    const int n = g.order();
    const double m = g.size();
    const double alpha = sp.alpha;
    const double tol = default_cluster_tol(sp.p.front());

    SpectrumShape out;
    out.clusters = cluster_descending(sp.p, tol);
    const auto s_levels = cluster_descending(sp.s, tol);
    if (s_levels.size() == 1) {
        out.h = out.k = s_levels[0].first;
        out.t = n;
    } else {
        out.h = s_levels[0].first;
        out.t = s_levels[0].second;
        out.k = s_levels[1].first;
    }
    out.k = std::max(out.k, 0.0);
    if (s_levels.size() > 2 || out.h <= tol) return out;

    auto near = [&](double x, double y) { return std::abs(x - y) <= tol; };
    // Matches the eigenvalue clusters against template (value, multiplicity)
    // entries; entries may be absent entirely (degenerate multiplicities) but
    // the matched multiplicities must account for all n eigenvalues.
    auto matches = [&](std::vector<std::pair<double, int>> tpl) {
        std::erase_if(tpl, [](const auto& e) { return e.second == 0; });
        std::vector<bool> used(tpl.size(), false);
        int covered = 0;
        for (const auto& [v, mult] : out.clusters) {
            bool ok = false;
            for (std::size_t i = 0; i < tpl.size(); ++i) {
                if (!used[i] && near(v, tpl[i].first) && mult == tpl[i].second) {
                    used[i] = true;
                    covered += mult;
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return covered == n;
    };

    if (matches({{n - 1.0, 1}, {alpha * n - 1.0, n - 1}})) {
        out.classification = ShapeClass::CompleteGraph;
        return out;
    }
    if (n % 2 == 0) {
        if (matches({{1.0, n / 2}, {2.0 * alpha - 1.0, n / 2}})) {
            out.classification = ShapeClass::MatchingUnion;
            return out;
        }
        if (matches({{n / 2.0, 1}, {alpha * n / 2.0, n - 2}, {n * (2.0 * alpha - 1.0) / 2.0, 1}})) {
            out.classification = ShapeClass::BalancedBipartite;
            return out;
        }
    }

    // Remaining templates are deviation-symmetric: every cluster must sit at
    // distance h or k from the eigenvalue mean.
    for (const auto& [v, mult] : out.clusters) {
        const double dev = std::abs(v - sp.mean_shift);
        if (!(near(dev, out.h) || near(dev, out.k) || (out.k <= tol && dev <= tol)))
            return out;
    }
    const double radius_dev = 2.0 * m / n * (1.0 - alpha);
    if (out.k <= tol) {
        if (out.h > radius_dev + tol) out.classification = ShapeClass::ThreeValueZero;
        return out;
    }
    if (near(out.h, radius_dev) && near(out.k, 1.0 - alpha)) {
        out.classification = ShapeClass::FourValueRegularRadius;
        return out;
    }
    if (out.h > radius_dev + tol && out.h > out.k + tol) {
        out.classification = ShapeClass::FourValueLargeRadius;
        return out;
    }
    if (near(out.h, out.k)) out.classification = ShapeClass::TwoLevelEqual;
    return out;
}

namespace {

std::pair<bool, double> sn_threshold_bound(const Graph& g, const Spectrum& sp,
                                           bool wide_premise) {
    require(sp.alpha >= 0.0 && sp.alpha < 1.0, "sn threshold bound: alpha must lie in [0,1)");
    require(g.order() >= 3 && g.size() >= 2, "sn threshold bound: needs n >= 3 and m >= 2");
    require(is_connected(g), "sn threshold bound: graph must be connected");
    const double n = g.order();
    const double c = c_threshold(g, sp.alpha);
    if (c < 0.0) return {false, 0.0};
    const double thr = wide_premise ? std::sqrt(c) / (2.0 * n) : std::sqrt(c) / (n * n * n);
    // The premise comparison is tolerance-padded: the extremal graph sits
    // exactly on the threshold, so a hard comparison would flip on rounding.
    if (sp.s.back() < thr - kEqTol) return {false, 0.0};
    const double coeff = wide_premise ? 2.0 * std::sqrt(2.0) / 3.0 : 2.0 * n / (1.0 + n * n);
    return {true, coeff * std::sqrt(spread_radicand(g, sp.alpha) * n)};
}

}  // namespace

std::pair<bool, double> lower_bound_sn_large(const Graph& g, const Spectrum& sp) {
    return sn_threshold_bound(g, sp, true);
}
std::pair<bool, double> lower_bound_sn_large(const Graph& g, double alpha) {
    return sn_threshold_bound(g, spectrum(g, alpha), true);
}
std::pair<bool, double> lower_bound_sn_small(const Graph& g, const Spectrum& sp) {
    return sn_threshold_bound(g, sp, false);
}
std::pair<bool, double> lower_bound_sn_small(const Graph& g, double alpha) {
    return sn_threshold_bound(g, spectrum(g, alpha), false);
}

std::pair<bool, double> lower_bound_sn_zero(const Graph& g, const Spectrum& sp) {
    require(sp.alpha >= 0.0 && sp.alpha < 1.0, "lower_bound_sn_zero: alpha must lie in [0,1)");
    require(is_connected(g), "lower_bound_sn_zero: graph must be connected");
    if (sp.s.back() > kEqTol || g.size() < 1) return {false, 0.0};
    return {true, moment_y(g, sp.alpha) / sp.s.front()};
}
std::pair<bool, double> lower_bound_sn_zero(const Graph& g, double alpha) {
    return lower_bound_sn_zero(g, spectrum(g, alpha));
}

std::pair<bool, double> lower_bound_sn_zero_degree(const Graph& g, const Spectrum& sp) {
    require(sp.alpha >= 0.0 && sp.alpha < 1.0, "lower_bound_sn_zero_degree: alpha must lie in [0,1)");
    require(is_connected(g), "lower_bound_sn_zero_degree: graph must be connected");
    require(sp.s.back() <= kEqTol && g.size() >= 1, "lower_bound_sn_zero_degree: needs s_n = 0");
    if (g.is_regular()) return {true, (1.0 - sp.alpha) * g.order()};
    const double denom = g.max_degree() - sp.mean_shift;
    require(denom > 0.0, "lower_bound_sn_zero_degree: degenerate denominator");
    return {false, spread_radicand(g, sp.alpha) / denom};
}
std::pair<bool, double> lower_bound_sn_zero_degree(const Graph& g, double alpha) {
    return lower_bound_sn_zero_degree(g, spectrum(g, alpha));
}

double lower_bound_regular(const Graph& g, const Spectrum& sp) {
    require(sp.alpha >= 0.0 && sp.alpha < 1.0, "lower_bound_regular: alpha must lie in [0,1)");
    require(g.is_regular() && g.size() >= 1, "lower_bound_regular: graph must be regular with edges");
    require(is_connected(g), "lower_bound_regular: graph must be connected");
    const double n = g.order(), r = g.max_degree(), sn = sp.s.back();
    if (sn <= kEqTol) return (1.0 - sp.alpha) * n;
    return 2.0 * (1.0 - sp.alpha) * n * r * std::sqrt(sn) / (r + sn);
}
double lower_bound_regular(const Graph& g, double alpha) {
    return lower_bound_regular(g, spectrum(g, alpha));
}

double upper_bound_main(const Graph& g, double alpha) {
    require(alpha >= 0.0 && alpha < 1.0, "upper_bound_main: alpha must lie in [0,1)");
    const double n = g.order();
    const double y = std::max(moment_y(g, alpha), 0.0);
    return std::sqrt(y / n) + std::sqrt((n - 1.0) * (y - y / n));
}

double upper_bound_zagreb(const Graph& g, double alpha) {
    require(alpha >= 0.0 && alpha < 1.0, "upper_bound_zagreb: alpha must lie in [0,1)");
    require(is_connected(g), "upper_bound_zagreb: graph must be connected");
    const double n = g.order(), m = g.size();
    const double dd = g.max_degree() - g.min_degree();
    return n * std::sqrt(2.0 * m * (1.0 - alpha) * (1.0 - alpha) / n +
                         alpha * alpha / 4.0 * dd * dd);
}

double upper_bound_regular(const Graph& g, double alpha) {
    require(alpha >= 0.0 && alpha < 1.0, "upper_bound_regular: alpha must lie in [0,1)");
    require(g.is_regular(), "upper_bound_regular: graph must be regular");
    const double n = g.order(), m = g.size();
    return n * (1.0 - alpha) * std::sqrt(2.0 * m / n);
}

ZagrebBounds zagreb_bounds(const Graph& g) {
    require(g.order() >= 2, "zagreb_bounds: needs n >= 2");
    require(is_connected(g), "zagreb_bounds: graph must be connected");
    const double n = g.order(), m = g.size();
    const double dd = g.max_degree() - g.min_degree();
    return {4.0 * m * m / n + dd * dd / 2.0,
            m * (2.0 * m / (n - 1.0) + n - 2.0),
            4.0 * m * m / n + n / 4.0 * dd * dd};
}

double trace_radius_bound(const SymMatrix& B) {
    require(B.order() >= 3, "trace_radius_bound: needs order >= 3");
    require(B.is_nonnegative(), "trace_radius_bound: matrix must be entrywise non-negative");
    const double n = B.order();
    const double a = B.trace();
    const double b = B.trace_of_square();
    const double inner = std::max(b - a * a / n, 0.0);
    return a / n + std::sqrt((n - 1.0) / n * inner);
}

bool ordered_sum_inequality(const std::vector<double>& a) {
    if (a.empty()) throw std::invalid_argument("ordered_sum_inequality: empty input");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0.0) throw std::invalid_argument("ordered_sum_inequality: negative entry");
        if (i > 0 && a[i] > a[i - 1])
            throw std::invalid_argument("ordered_sum_inequality: input not sorted descending");
    }
    const double n = static_cast<double>(a.size());
    double sum = 0.0, sum_sq = 0.0;
    for (double v : a) {
        sum += v;
        sum_sq += v * v;
    }
    const double lhs = sum * (a.front() + a.back());
    const double rhs = sum_sq + n * a.front() * a.back();
    return lhs - rhs >= -kStrictTol;
}

BoundReport full_report(const Graph& g, double alpha) {
    return full_report(g, spectrum(g, alpha));
}

BoundReport full_report(const Graph& g, const Spectrum& sp) {
    const int n = g.order();
    const int m = g.size();
    const double alpha = sp.alpha;
    const bool alpha_ok = alpha < 1.0;
    const bool connected = is_connected(g);
    const double s1 = sp.s.front(), sn = sp.s.back();
    const double m1 = static_cast<double>(g.zagreb_m1());

    BoundReport rep;
    rep.alpha = alpha;
    rep.y = moment_y(g, alpha);
    rep.c_threshold = c_threshold(g, alpha);
    rep.energy = sp.energy;
    rep.shape = classify_equality_shape(sp, g);

    const ShapeClass cls = rep.shape.classification;
    const bool named = cls != ShapeClass::None;
    const bool balanced_cb = is_balanced_complete_bipartite(g);
    const bool matching = m >= 1 && is_perfect_matching(g);

    auto add = [&](std::string name, bool upper, bool applicable, std::string reason,
                   double value, double measured, bool confirm) {
        BoundValue b;
        b.name = std::move(name);
        b.is_upper = upper;
        b.applicable = applicable;
        b.reason = applicable ? std::string{} : std::move(reason);
        if (applicable) {
            b.value = value;
            b.measured = measured;
            b.slack = measured - value;
            b.satisfied = upper ? b.slack <= kEqTol : b.slack >= -kEqTol;
            b.equality = std::abs(b.slack) <= kEqTol && confirm;
        }
        rep.bounds.push_back(std::move(b));
    };
    auto inapplicable = [&](std::string name, bool upper, std::string reason) {
        add(std::move(name), upper, false, std::move(reason), 0.0, 0.0, false);
    };

    // lower_strict
    if (alpha_ok && connected && n >= 2 && m >= 1)
        add("lower_strict", false, true, {}, std::sqrt(2.0 * std::max(rep.y, 0.0)), sp.energy,
            two_equal_deviations(sp));
    else
        inapplicable("lower_strict", false,
                     !alpha_ok ? "alpha = 1" : !connected ? "disconnected" : "needs n >= 2 and m >= 1");

    // lower_two_level
    if (alpha_ok && n >= 2 && m >= 1 && s1 + sn > kStrictTol)
        add("lower_two_level", false, true, {}, lower_bound_two_level(g, sp), sp.energy, named);
    else
        inapplicable("lower_two_level", false,
                     !alpha_ok ? "alpha = 1"
                     : (n < 2 || m < 1) ? "needs n >= 2 and m >= 1"
                                        : "deviations vanish");

    // lower_sn_large / lower_sn_small
    if (alpha_ok && connected && n >= 3 && m >= 2) {
        const auto [ok_l, val_l] = lower_bound_sn_large(g, sp);
        if (ok_l)
            add("lower_sn_large", false, true, {}, val_l, sp.energy, n == 3 && is_complete(g));
        else
            inapplicable("lower_sn_large", false,
                         rep.c_threshold < 0.0 ? "negative threshold constant"
                                               : "smallest deviation below threshold");
        const auto [ok_s, val_s] = lower_bound_sn_small(g, sp);
        if (ok_s)
            add("lower_sn_small", false, true, {}, val_s, sp.energy, false);
        else
            inapplicable("lower_sn_small", false,
                         rep.c_threshold < 0.0 ? "negative threshold constant"
                                               : "smallest deviation below threshold");
    } else {
        const std::string why = !alpha_ok ? "alpha = 1"
                                : !connected ? "disconnected"
                                             : "needs n >= 3 and m >= 2";
        inapplicable("lower_sn_large", false, why);
        inapplicable("lower_sn_small", false, why);
    }

    // lower_sn_zero and its degree-based refinement
    if (alpha_ok && connected && m >= 1 && sn <= kEqTol) {
        add("lower_sn_zero", false, true, {}, rep.y / s1, sp.energy,
            cls == ShapeClass::BalancedBipartite || cls == ShapeClass::ThreeValueZero);
        const auto [regular_branch, val] = lower_bound_sn_zero_degree(g, sp);
        add("lower_sn_zero_degree", false, true, {}, val, sp.energy,
            regular_branch && balanced_cb);
    } else {
        const std::string why = !alpha_ok ? "alpha = 1"
                                : !connected ? "disconnected"
                                : m < 1 ? "edgeless"
                                        : "nonzero smallest deviation";
        inapplicable("lower_sn_zero", false, why);
        inapplicable("lower_sn_zero_degree", false, why);
    }

    // lower_regular
    if (alpha_ok && connected && g.is_regular() && m >= 1)
        add("lower_regular", false, true, {}, lower_bound_regular(g, sp), sp.energy,
            sn <= kEqTol ? balanced_cb : named);
    else
        inapplicable("lower_regular", false,
                     !alpha_ok ? "alpha = 1"
                     : !connected ? "disconnected"
                     : !g.is_regular() ? "not regular"
                                       : "edgeless");

    // upper_main
    if (alpha_ok)
        add("upper_main", true, true, {}, upper_bound_main(g, alpha), sp.energy, matching);
    else
        inapplicable("upper_main", true, "alpha = 1");

    // upper_zagreb
    if (alpha_ok && connected)
        add("upper_zagreb", true, true, {}, upper_bound_zagreb(g, alpha), sp.energy,
            n == 2 && m == 1);
    else
        inapplicable("upper_zagreb", true, !alpha_ok ? "alpha = 1" : "disconnected");

    // upper_regular
    if (alpha_ok && g.is_regular())
        add("upper_regular", true, true, {}, upper_bound_regular(g, alpha), sp.energy, matching);
    else
        inapplicable("upper_regular", true, !alpha_ok ? "alpha = 1" : "not regular");

    // Zagreb index bounds (alpha-free)
    if (connected && n >= 2) {
        const ZagrebBounds zb = zagreb_bounds(g);
        add("zagreb_lower", false, true, {}, zb.lower, m1, std::abs(m1 - zb.lower) <= kEqTol);
        add("zagreb_upper_size", true, true, {}, zb.upper_size, m1,
            std::abs(m1 - zb.upper_size) <= kEqTol);
        add("zagreb_upper_spread", true, true, {}, zb.upper_spread, m1,
            std::abs(m1 - zb.upper_spread) <= kEqTol);
    } else {
        const std::string why = !connected ? "disconnected" : "needs n >= 2";
        inapplicable("zagreb_lower", false, why);
        inapplicable("zagreb_upper_size", true, why);
        inapplicable("zagreb_upper_spread", true, why);
    }

    // trace-based spectral radius cap on the alpha matrix
    if (n >= 3) {
        const double bound = trace_radius_bound(build_alpha_matrix(g, alpha));
        add("trace_radius", true, true, {}, bound, sp.p.front(),
            std::abs(sp.p.front() - bound) <= kEqTol);
    } else {
        inapplicable("trace_radius", true, "needs n >= 3");
    }

    return rep;
}

}  // namespace aspectra
