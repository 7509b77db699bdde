#pragma once

#include <optional>

namespace diffinv {

/// Subsurface drainage between parallel drains (horizontal flow only).
///
/// Units are fixed: metres and days. `L` is half the drain spacing; the field
/// spacing is 2L. Unknown quantities of an inverse problem stay empty.
struct DrainageScenario {
    double h0 = 0.0;  // initial water-table height above drain level, m
    double d = 0.0;   // drain-axis elevation above the impervious layer, m
    double H = 0.0;   // observed water-table height at x = L, m
    std::optional<double> T;  // elapsed time, days
    std::optional<double> L;  // half drain spacing, m
    std::optional<double> A;  // diffusion coefficient, m²/day

    /// Observed drop measured from the drain axis, H - d.
    double head_above_drain() const { return H - d; }
};

/// 𝒜 = K·B/S_y with B = d + h0/2.
double diffusion_from_soil(double K, double S_y, double d, double h0);

/// Vertical infiltration into a bounded profile, gravity neglected.
///
/// Units are fixed: centimetres and hours. Theta is the moisture measured at
/// depth L/2 and time T.
struct InfiltrationScenario {
    double theta0 = 0.0;  // initial (residual) moisture, cm³/cm³
    double theta1 = 0.0;  // boundary moisture at x = 0, cm³/cm³
    double L = 0.0;       // profile length, cm
    std::optional<double> Theta;  // measured moisture at L/2, cm³/cm³
    std::optional<double> T;      // time, h
    std::optional<double> D0;     // diffusivity, cm²/h
};

}  // namespace diffinv
