#include <cmath>
#include <complex>

#include "diffinv/errors.hpp"
#include "diffinv/invert_large.hpp"

namespace diffinv::invert_large {

namespace {

using cplx = std::complex<double>;

// One root of the monic cubic z³ + b z² + c z + d (Cardano).
cplx cubic_root(cplx b, cplx c, cplx d) {
    const cplx p = c - b * b / 3.0;
    const cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cplx u = std::pow(-q / 2.0 + disc, 1.0 / 3.0);
    if (std::abs(u) < 1e-300) {
        u = std::pow(-q / 2.0 - disc, 1.0 / 3.0);
    }
    const cplx y = std::abs(u) < 1e-300 ? cplx{0.0} : u - p / (3.0 * u);
    return y - b / 3.0;
}

cplx polish(const std::array<double, 5>& c, cplx x) {
    for (int it = 0; it < 3; ++it) {
        const cplx f = (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
        const cplx df = ((4.0 * c[4] * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1];
        if (std::abs(df) == 0.0) break;
        x -= f / df;
    }
    return x;
}

}  // namespace

std::array<cplx, 4> solve_quartic(const std::array<double, 5>& coeffs) {
    if (coeffs[4] == 0.0) {
        throw DomainError("solve_quartic: leading coefficient is zero");
    }
    const double A = coeffs[3] / coeffs[4];
    const double B = coeffs[2] / coeffs[4];
    const double C = coeffs[1] / coeffs[4];
    const double D = coeffs[0] / coeffs[4];

    // x = y - A/4 gives y⁴ + p y² + q y + r.
    const double p = B - 3.0 * A * A / 8.0;
    const double q = C - A * B / 2.0 + A * A * A / 8.0;
    const double r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * A * A * A * A / 256.0;
    const double shift = -A / 4.0;

    std::array<cplx, 4> roots;
    if (std::abs(q) <= 1e-14 * (std::abs(p) + std::abs(r) + 1.0)) {
        // Biquadratic.
        const cplx s = std::sqrt(cplx(p * p - 4.0 * r));
        const cplx z1 = (-p + s) / 2.0;
        const cplx z2 = (-p - s) / 2.0;
        roots = {std::sqrt(z1), -std::sqrt(z1), std::sqrt(z2), -std::sqrt(z2)};
    } else {
        // Resolvent 8m³ + 8p m² + (2p² - 8r) m - q² = 0 with m ≠ 0.
        const cplx m = cubic_root(p, (p * p - 4.0 * r) / 4.0, -q * q / 8.0);
        const cplx s = std::sqrt(2.0 * m);
        const cplx t1 = std::sqrt(-(2.0 * p + 2.0 * m + std::sqrt(2.0) * q / std::sqrt(m)));
        const cplx t2 = std::sqrt(-(2.0 * p + 2.0 * m - std::sqrt(2.0) * q / std::sqrt(m)));
        roots = {(s + t1) / 2.0, (s - t1) / 2.0, (-s + t2) / 2.0, (-s - t2) / 2.0};
    }
    for (auto& x : roots) {
        x = polish(coeffs, x + shift);
    }
    return roots;
}

}  // namespace diffinv::invert_large
