#include "diffinv/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "diffinv/common.hpp"
#include "diffinv/series.hpp"

namespace diffinv::oracle {

void RootFindSpec::validate() const {
    if (!(a_lo > 0.0 && a_lo < a_hi)) throw DomainError("RootFindSpec requires 0 < a_lo < a_hi");
    if (!(tol_a > 0.0)) throw DomainError("RootFindSpec.tol_a must be positive");
    if (max_iter < 1) throw DomainError("RootFindSpec.max_iter must be at least 1");
}

double true_a(double c, const RootFindSpec& spec) {
    spec.validate();
    require_unit_interval(c);
    auto f = [c](double a) { return series::I_exact(a) - c; };
    const double f_lo = f(spec.a_lo);
    const double f_hi = f(spec.a_hi);
    if (!(f_lo < 0.0 && f_hi > 0.0)) {
        throw DomainError("true_a: c=" + std::to_string(c) + " is not bracketed by I(a_lo), I(a_hi)");
    }
    const double tol_a = spec.tol_a;
    auto done = [tol_a](double lo, double hi) {
        return hi - lo <= tol_a || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi;
    };
    std::uintmax_t iters = static_cast<std::uintmax_t>(spec.max_iter);
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, spec.a_lo, spec.a_hi, f_lo, f_hi, done, iters);
    if (!done(lo, hi)) {
        throw ToleranceError("true_a: bracket did not converge at c=" + std::to_string(c));
    }
    return 0.5 * (lo + hi);
}

std::vector<double> uniform_grid(int n, double lo, double hi) {
    if (n < 1) throw DomainError("grid needs at least one point");
    if (!(lo > 0.0 && hi < 1.0 && lo <= hi)) throw DomainError("grid must lie within (0,1)");
    if (n == 1) return {lo};
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return grid;
}

std::vector<composite::ErrorReport> error_sweep(SchemeId scheme, std::span<const double> c_grid,
                                                const contour::QuadratureSpec& q) {
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        require_unit_interval(c_grid[i], "grid value");
        if (i > 0 && !(c_grid[i] > c_grid[i - 1])) throw DomainError("grid must be strictly increasing");
    }
    std::vector<composite::ErrorReport> out;
    out.reserve(c_grid.size());
    for (const double c : c_grid) {
        try {
            out.push_back(composite::relative_error(c, estimate_a(c, scheme, q)));
        } catch (const Error& e) {
            composite::ErrorReport r;
            r.c_target = c;
            r.a_estimate = r.c_reconstructed = r.re_percent = std::numeric_limits<double>::quiet_NaN();
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace diffinv::oracle
