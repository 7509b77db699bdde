#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "diffinv/errors.hpp"

namespace diffinv {

inline constexpr double kPi = std::numbers::pi;

// 4/π²: converts ln(1/w) into a, where w = exp(-π²a/4).
inline constexpr double kFourOverPiSq = 4.0 / (kPi * kPi);

/// Throws DomainError unless 0 < c < 1.
inline void require_unit_interval(double c, const char* what = "c") {
    if (!(c > 0.0 && c < 1.0)) {
        throw DomainError(std::string(what) + " must lie in (0,1), got " + std::to_string(c));
    }
}

inline void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " + std::to_string(v));
    }
}

/// First-order (Glover–Dumm) estimate a* = (4/π²) ln(4/(π(1-c))).
///
/// Also the expansion point of the ε-schemes, where exp(-π²a*/4) = (π/4)(1-c) exactly.
inline double a_star(double c) {
    require_unit_interval(c);
    return kFourOverPiSq * std::log(4.0 / (kPi * (1.0 - c)));
}

}  // namespace diffinv
