#pragma once

#include <span>
#include <vector>

#include "diffinv/composite.hpp"
#include "diffinv/schemes.hpp"

namespace diffinv::oracle {

struct RootFindSpec {
    double a_lo = 1e-8;
    double a_hi = 50.0;
    double tol_a = 1e-13;  // absolute width of the final bracket
    int max_iter = 200;

    void validate() const;
};

/// Numerically exact root of I(a) = c on the exact series (bracketed TOMS 748).
///
/// Throws DomainError if c is not bracketed by I(a_lo), I(a_hi), and
/// ToleranceError if the bracket does not shrink to tol_a within max_iter.
double true_a(double c, const RootFindSpec& spec = {});

/// n uniformly spaced points on [lo, hi]; the default is 0.001, 0.002, …, 0.999.
std::vector<double> uniform_grid(int n = 999, double lo = 0.001, double hi = 0.999);

/// One ErrorReport per grid point, in input order. A failing point is recorded
/// with its message and NaN values; the sweep itself never aborts.
std::vector<composite::ErrorReport> error_sweep(SchemeId scheme, std::span<const double> c_grid,
                                                const contour::QuadratureSpec& q = {});

}  // namespace diffinv::oracle
