#include "diffinv/specfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "diffinv/errors.hpp"

namespace diffinv::specfn {

namespace {

// Acklam's rational approximation of the standard normal quantile, lower half
// (p ≤ 0.5). Relative error ~1.2e-9, which is all a Newton seed needs.
double normal_quantile_lower(double p) {
    constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                            1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                            6.680131188771972e+01,  -1.328068155288572e+01};
    constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                            -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                            3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// erfc(x) underflows to zero just past this point.
constexpr double kErfcUpper = 27.3;

// Root of erfc(x) = y for y in (0,1), so x > 0.
double erfc_inv_upper(double y, const SpecFnConfig& cfg) {
    double x = -normal_quantile_lower(0.5 * y) / std::numbers::sqrt2;
    const double log_y = std::log(y);

    double lo = 0.0;
    double hi = kErfcUpper;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double e = std::erfc(x);
        if (e > y) {
            lo = std::max(lo, x);
        } else {
            hi = std::min(hi, x);
        }
        // Newton on g(x) = ln erfc(x) - ln y, g'(x) = -(2/√π) e^{-x²} / erfc(x).
        const double g = std::log(e) - log_y;
        const double dg = -std::numbers::inv_sqrtpi * 2.0 * std::exp(-x * x) / e;
        double next = x - g / dg;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double step = std::abs(next - x);
        x = next;
        if (step <= cfg.newton_tol * std::max(1.0, x)) {
            break;
        }
    }
    return x;
}

}  // namespace

void SpecFnConfig::validate() const {
    if (!(newton_tol > 0.0)) {
        throw DomainError("SpecFnConfig.newton_tol must be positive");
    }
    if (max_iter < 1) {
        throw DomainError("SpecFnConfig.max_iter must be at least 1");
    }
}

double erfc(double x) {
    return std::erfc(x);
}

double erfc_inv(double y, const SpecFnConfig& cfg) {
    cfg.validate();
    if (!(y > 0.0 && y < 2.0)) {
        throw DomainError("erfc_inv requires 0 < y < 2, got " + std::to_string(y));
    }
    if (y == 1.0) {
        return 0.0;
    }
    if (y > 1.0) {
        // 2 - y is exact for y in [1,2].
        return -erfc_inv_upper(2.0 - y, cfg);
    }
    return erfc_inv_upper(y, cfg);
}

double lambert_w0(double x, const SpecFnConfig& cfg) {
    cfg.validate();
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("lambert_w0 requires finite x >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) {
        return 0.0;
    }
    double w = std::log1p(x);
    for (int it = 0; it < cfg.max_iter; ++it) {
        // Halley on f(w) = w e^w - x, with every term scaled by e^{-w}.
        const double t = w - x * std::exp(-w);
        const double wp1 = w + 1.0;
        const double step = t / (wp1 - (w + 2.0) * t / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= cfg.newton_tol * (1.0 + std::abs(w))) {
            break;
        }
    }
    return w;
}

}  // namespace diffinv::specfn
