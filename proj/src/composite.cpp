#include "diffinv/composite.hpp"

#include <cmath>

#include "diffinv/common.hpp"
#include "diffinv/invert_large.hpp"
#include "diffinv/invert_small.hpp"
#include "diffinv/series.hpp"

namespace diffinv::composite {

CompositeScheme CompositeScheme::perfect_match() {
    return {CompositeId::PerfectMatch, kPerfectMatchBreakpoint, 0.0005, 3};
}

CompositeScheme CompositeScheme::explicit_1() {
    return {CompositeId::Explicit1, kExplicit1Breakpoint, 1.2, 3};
}

CompositeScheme CompositeScheme::explicit_2() {
    return {CompositeId::Explicit2, kExplicit2Breakpoint, 3.1, 3};
}

void CompositeScheme::validate() const {
    if (!(breakpoint > 0.0 && breakpoint < 1.0)) throw DomainError("composite breakpoint must lie in (0,1)");
    if (fourier_terms < 0 || fourier_terms > 6) throw DomainError("fourier_terms must be in 0..6");
}

double lower_branch(double c, const CompositeScheme& s, const contour::QuadratureSpec&) {
    switch (s.id) {
        case CompositeId::PerfectMatch: return invert_small::invert_erfc(c);
        case CompositeId::Explicit1: return invert_small::invert_p_expansion(c);
        case CompositeId::Explicit2: return invert_small::invert_lambert(c, false);
    }
    throw DomainError("unknown composite scheme");
}

double upper_branch(double c, const CompositeScheme& s, const contour::QuadratureSpec& q) {
    switch (s.id) {
        case CompositeId::PerfectMatch: return invert_large::invert_epsilon_poly(c, 2, q);
        case CompositeId::Explicit1: return invert_large::invert_fourier_terms(c, s.fourier_terms);
        case CompositeId::Explicit2: return invert_large::invert_first_order(c);
    }
    throw DomainError("unknown composite scheme");
}

double composite_invert(double c, const CompositeScheme& s, const contour::QuadratureSpec& q) {
    s.validate();
    require_unit_interval(c);
    return c <= s.breakpoint ? lower_branch(c, s, q) : upper_branch(c, s, q);
}

ErrorReport relative_error(double c_target, double a_estimate) {
    require_unit_interval(c_target, "c_target");
    require_positive(a_estimate, "a_estimate");
    ErrorReport r;
    r.c_target = c_target;
    r.a_estimate = a_estimate;
    r.c_reconstructed = series::I_exact(a_estimate);
    r.re_percent = std::abs(r.c_reconstructed - c_target) / c_target * 100.0;
    return r;
}

}  // namespace diffinv::composite
