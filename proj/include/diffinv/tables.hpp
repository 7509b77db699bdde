#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "diffinv/contour.hpp"
#include "diffinv/schemes.hpp"

namespace diffinv::tables {

/// Scheme columns shared by the drainage and diffusivity tables.
inline constexpr std::array<SchemeId, 4> kColumns = {SchemeId::FirstOrder, SchemeId::PerfectMatch,
                                                     SchemeId::Explicit1, SchemeId::Explicit2};

// ---- Fourier-order thresholds ----

struct ThresholdRow {
    int N = 0;
    double c_min = 0.0;  // c where the RE of the order-N inversion crosses the limit
    double a_min = 0.0;  // true a at c_min
};

/// Scans c downward from 0.999 in steps of `step` to the first c where the
/// order-N Fourier inversion exceeds `re_limit` percent, then bisects the
/// last step down to the crossing.
ThresholdRow fourier_threshold(int N, double re_limit = 0.01, double step = 1e-4);
std::vector<ThresholdRow> threshold_table(double re_limit = 0.01, double step = 1e-4);

// ---- Drainage field data ----

/// One field observation. c1 and spacing are optional overrides: when present
/// they are used as printed instead of being derived from h0, d and the soil.
struct DrainageRecord {
    double T = 0.0;          // days
    double H_minus_d = 0.0;  // m
    double S_y = 0.0;
    double K = 0.0;  // m/day
    std::optional<double> c1;
    std::optional<double> spacing;  // true 2L, m
};

/// Built-in field record set (h0 = 1.57 m), with printed c1 and true spacings.
std::span<const DrainageRecord> field_records();
inline constexpr double kFieldH0 = 1.57;
/// Spacings (2L, m) paired row by row with field_records() for the drain-time table.
std::span<const double> field_spacings();

struct SpacingRow {
    double T = 0.0;
    double c1 = 0.0;
    double A = 0.0;  // m²/day
    double spacing_true = 0.0;
    std::array<double, kColumns.size()> spacing{};
};

/// Drain spacing per record and scheme.
///
/// A comes from the printed spacing when present (A = a_true·L²/T), otherwise
/// from the soil, which then requires d. c1 comes from the record when present,
/// otherwise from H - d and h0.
std::vector<SpacingRow> spacing_table(std::span<const DrainageRecord> records, double h0, std::optional<double> d,
                                      const contour::QuadratureSpec& q = {});

struct TimeRow {
    double spacing = 0.0;  // 2L, m
    double T_true = 0.0;
    std::array<double, kColumns.size()> T{};
};

/// Drain time per record for the given spacings, with c1 and A as in spacing_table.
std::vector<TimeRow> time_table(std::span<const DrainageRecord> records, std::span<const double> spacings, double h0,
                                std::optional<double> d, const contour::QuadratureSpec& q = {});

// ---- Moisture data ----

struct MoistureRecord {
    double T = 0.0;   // h
    double D0 = 0.0;  // cm²/h
};

/// Built-in synthetic records (L = 100 cm, θ0 = 0.05, θ1 = 0.4).
std::span<const MoistureRecord> moisture_records();

struct DiffusivityRow {
    double T = 0.0;
    double D0_true = 0.0;
    double Theta = 0.0;
    double c2 = 0.0;
    std::array<double, kColumns.size()> D0{};
};

std::vector<DiffusivityRow> diffusivity_table(std::span<const MoistureRecord> records,
                                              const contour::QuadratureSpec& q = {});

}  // namespace diffinv::tables
