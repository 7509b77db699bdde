#pragma once

#include <string>

#include "diffinv/contour.hpp"

namespace diffinv::composite {

enum class CompositeId { PerfectMatch, Explicit1, Explicit2 };

// Breakpoints where the relative-error curves of the two branches cross.
// Commonly quoted rounded as 0.18, 0.1 and 0.22; the rounded values push the
// RE of the first two schemes above their ceilings just past the breakpoint.
inline constexpr double kPerfectMatchBreakpoint = 0.18458;
inline constexpr double kExplicit1Breakpoint = 0.099206;
inline constexpr double kExplicit2Breakpoint = 0.22584;

/// Piecewise inverse: small-a branch on (0, breakpoint], large-a branch above.
struct CompositeScheme {
    CompositeId id = CompositeId::PerfectMatch;
    double breakpoint = kPerfectMatchBreakpoint;
    double advertised_re_bound = 0.0005;  // percent
    int fourier_terms = 3;                // explicit_1 only: f_n corrections kept

    static CompositeScheme perfect_match();
    static CompositeScheme explicit_1();
    static CompositeScheme explicit_2();

    void validate() const;
};

/// Value of the lower branch at c.
double lower_branch(double c, const CompositeScheme& s, const contour::QuadratureSpec& q = {});
/// Value of the upper branch at c.
double upper_branch(double c, const CompositeScheme& s, const contour::QuadratureSpec& q = {});

/// perfect_match: erfc inverse | quadratic ε-scheme.
/// explicit_1:    P-expansion  | log-corrected first order (f_1..f_3).
/// explicit_2:    log-log      | first order.
double composite_invert(double c, const CompositeScheme& s, const contour::QuadratureSpec& q = {});

/// Reconstruction error of an estimate of a against the datum c.
struct ErrorReport {
    double c_target = 0.0;
    double a_estimate = 0.0;
    double c_reconstructed = 0.0;
    double re_percent = 0.0;
    std::string error;  // non-empty when the estimate could not be produced

    bool ok() const { return error.empty(); }
};

/// c_reconstructed = I(a_estimate) from the exact series;
/// re_percent = |c_reconstructed - c_target| / c_target × 100.
ErrorReport relative_error(double c_target, double a_estimate);

}  // namespace diffinv::composite
