#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diffinv/contour.hpp"
#include "diffinv/scenario.hpp"
#include "diffinv/schemes.hpp"

namespace diffinv::physics {

enum class InverseProblem {
    DrainSpacing,  // L from (A, T)
    DrainTime,     // T from (A, L)
    Diffusivity,   // D0 from (L, T)
};

/// c1 = 1 - (H - d)/h0. The matching a1 = A·T/L².
///
/// Throws AdmissibilityError unless d < H < d + h0 (both ends excluded).
double reduce_drainage(const DrainageScenario& s);

/// c2 = 2(Θ - θ0)/(θ1 - θ0). The matching a2 = 4·D0·T/L².
///
/// Throws AdmissibilityError unless θ0 < Θ < (θ0 + θ1)/2.
double reduce_infiltration(const InfiltrationScenario& s);

double drainage_a(double A, double T, double L);
double infiltration_a(double D0, double T, double L);

/// Half drain spacing L = √(A·T/a). Needs A and T.
double solve_drain_spacing(const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q = {});
/// T = a·L²/A. Needs A and L.
double solve_drain_time(const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q = {});
/// D0 = a·L²/(4T). Needs T.
double solve_diffusivity(const InfiltrationScenario& s, SchemeId scheme, const contour::QuadratureSpec& q = {});

/// DrainSpacing or DrainTime on a drainage scenario.
double solve_ip(InverseProblem p, const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q = {});
/// Diffusivity on an infiltration scenario.
double solve_ip(InverseProblem p, const InfiltrationScenario& s, SchemeId scheme,
                const contour::QuadratureSpec& q = {});

/// Closed forms equal to the first-order inversion:
///   L  = √(π²AT / (4 ln(4h0/(π(H-d)))))
///   T  = (4L²/(π²A)) ln(4h0/(π(H-d)))
///   D0 = (L²/(π²T)) ln((4/π)(θ1-θ0)/(θ1+θ0-2Θ))
double glover_dumm(InverseProblem p, const DrainageScenario& s);
double glover_dumm(InverseProblem p, const InfiltrationScenario& s);

/// Synthetic moisture data: D0 = 1.2(1 + δ) cm²/h with δ uniform on [0,1),
/// θ0 = 0.05, θ1 = 0.4, L = 100 cm and Θ = θ(L/2, T).
///
/// Scenario i uses times[i % times.size()]. δ is the top 53 bits of successive
/// std::mt19937_64 outputs scaled by 2⁻⁵³, so a seed fixes the output on any
/// platform.
std::vector<InfiltrationScenario> simulate_moisture(std::uint64_t seed, int n, std::span<const double> times,
                                                    const contour::QuadratureSpec& q = {});

/// Scenario with a given D0 and T, moisture read off the forward solution.
InfiltrationScenario moisture_scenario(double D0, double T, const contour::QuadratureSpec& q = {});

}  // namespace diffinv::physics
