#pragma once

// Special functions needed by the inversion formulas: erfc, its inverse and
// the principal branch of the Lambert W function on the nonnegative ray.

namespace diffinv::specfn {

struct SpecFnConfig {
    double newton_tol = 1e-15;  // relative step size at which iteration stops
    int max_iter = 100;

    void validate() const;
};

/// Complementary error function, (2/√π)∫ₓ^∞ e^{-z²} dz.
double erfc(double x);

/// Inverse of erfc on (0,2). Throws DomainError outside the open interval.
///
/// Newton iteration on ln erfc(x) = ln y, seeded with Acklam's rational
/// approximation of the inverse normal CDF; falls back to bisection if an
/// iterate escapes the bracket.
double erfc_inv(double y, const SpecFnConfig& cfg = {});

/// Principal branch W₀ on x ≥ 0 (w·e^w = x). Throws DomainError for x < 0.
double lambert_w0(double x, const SpecFnConfig& cfg = {});

}  // namespace diffinv::specfn
