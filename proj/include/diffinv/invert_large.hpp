#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diffinv/contour.hpp"

namespace diffinv::invert_large {

using Rational = boost::multiprecision::cpp_rational;

/// Lagrange–Bürmann coefficients for the order-N truncated Fourier series.
///
/// With w = exp(-π²a/4) and γ = (π/4)(1-c), the truncated equation
///   Σ_{n≤N} (-1)ⁿ w^{(2n+1)²}/(2n+1) = γ
/// inverts to w = Σ_{n≤M} g_n γ^{8n+1}, M = N(N+1)/2, and
///   ln(Σ g_n γ^{8n}) = Σ_{n≥1} f_n γ^{8n}.
struct InversionCoefficients {
    int N = 0;
    int M = 0;
    std::vector<Rational> g;  // g_0..g_M, g_0 = 1
    std::vector<Rational> f;  // f_1..f_M, stored at index n-1
};

/// Tabulated f_1..f_6 (double). Must agree with gen_inversion_coeffs(3).
inline constexpr std::array<double, 6> kLogCoefficients = {
    1.0 / 3.0, 17.0 / 18.0, 1544.0 / 405.0, 29161.0 / 1620.0, 112504.0 / 1215.0, 192488308.0 / 382725.0,
};

/// Exact g and f for 0 ≤ N ≤ 3. Throws DomainError for other orders.
InversionCoefficients gen_inversion_coeffs(int N);

/// |Σ_{n≤N} (-1)ⁿ w^{(2n+1)²}/(2n+1) - γ| after substituting the truncated
/// inverse w(γ), evaluated in 300-digit arithmetic. Returned as log10.
double certification_residual_log10(int N, double log10_gamma);

/// Log-log slope of the certification residual over γ ∈ {1e-2, 1e-2.5, 1e-3}.
/// Expected ≈ 8M+9 for N ≥ 1.
double certification_slope(int N);

/// a ≈ (4/π²) ln(4/(π(1-c))).
double invert_first_order(double c);

/// First-order estimate minus the first `terms` log corrections f_n γ^{8n}.
double invert_fourier_terms(double c, int terms);

/// invert_fourier_terms with M = N(N+1)/2 corrections, 0 ≤ N ≤ 3.
double invert_fourier_N(double c, int N);

/// a = a* - ε with Σ_{n≤K} b_n ε^n = c.
struct EpsilonExpansion {
    double a_star = 0.0;
    std::vector<double> b;  // b_0..b_K
    int K = 2;
};

/// a* and b_0..b_K from contour quadrature. b_n are cached per (c, tol).
EpsilonExpansion epsilon_expansion(double c, int K, const contour::QuadratureSpec& q = {});

/// Solve the ε-polynomial of degree 2 (closed form, "minus" root) or 4
/// (Ferrari; smallest real root in (0, a*)), polish with one Newton step and
/// return a* - ε. Throws DomainError when no admissible root exists.
double invert_epsilon_poly(double c, int K, const contour::QuadratureSpec& q = {});

/// Drop every cached b_n.
void clear_bn_cache();

/// Roots of c0 + c1 x + c2 x² + c3 x³ + c4 x⁴ (c4 ≠ 0) by Ferrari's method,
/// each refined by complex Newton steps on the original polynomial.
std::array<std::complex<double>, 4> solve_quartic(const std::array<double, 5>& coeffs);

}  // namespace diffinv::invert_large
