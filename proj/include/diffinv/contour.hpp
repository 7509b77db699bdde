#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "diffinv/scenario.hpp"

namespace diffinv::contour {

/// Quadrature along the hyperbola k(r) = s·(2 sinh r + i cosh r), r ∈ [-r_max, r_max].
///
/// s = 1 for a ≤ 1. For larger a the curve is scaled by s = 1/√a; it keeps the
/// same asymptotic directions and stays above the real poles, so the value of
/// the integral is unchanged while the e^{a} peak at k = i disappears.
struct QuadratureSpec {
    std::optional<double> r_max;  // empty: chosen from a and tol
    int n_nodes = 64;             // initial node count, doubled until converged
    double tol = 1e-12;           // absolute tolerance between successive refinements
    int max_nodes = 1 << 17;

    void validate() const;
};

/// The pair linked by I(a) = c.
struct DimensionlessPair {
    double a = 0.0;
    double c = 0.0;
};

struct ContourResult {
    std::complex<double> value;  // (i/π)∫_C e^{-a k²} φ(k) dk
    double r_max = 0.0;
    int nodes = 0;
};

using Kernel = std::function<std::complex<double>(std::complex<double>)>;

/// (i/π)∫_C e^{-a k²} φ(k) dk on the (scaled) hyperbola. a ≥ 0.
///
/// Throws ToleranceError when refinement exhausts the node budget.
ContourResult integrate(double a, const Kernel& phi, const QuadratureSpec& q = {});

/// I(a) = (i/π)∫_C e^{-a k²}/(k cos k) dk.
///
/// For a < 0.02 the value comes from the erfc-sum series, where it is most
/// accurate and the contour integrand is at its stiffest.
double eval_I(double a, const QuadratureSpec& q = {});

/// Contour value of I(a) with no small-a fallback.
double eval_I_contour(double a, const QuadratureSpec& q = {});

/// b_n(c) = (i/π)(1/n!)∫_C e^{-a* k²} k^{2n-1}/cos k dk, 0 ≤ n ≤ 4.
double eval_bn(int n, double c, const QuadratureSpec& q = {});

/// (i/π)∫_C k^{2n-1}/cos k dk for n ≥ 1, which vanishes by analyticity.
double eval_algebraic_moment(int n, const QuadratureSpec& q = {});

/// Water-table height h(x,t) in metres; needs h0, d, L and A on the scenario.
double eval_h(double x, double t, const DrainageScenario& s, const QuadratureSpec& q = {});

/// Moisture θ(x,t); needs theta0, theta1, L and D0 on the scenario.
double eval_theta(double x, double t, const InfiltrationScenario& s, const QuadratureSpec& q = {});

}  // namespace diffinv::contour
