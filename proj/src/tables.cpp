#include "diffinv/tables.hpp"

#include <cmath>

#include "diffinv/common.hpp"
#include "diffinv/composite.hpp"
#include "diffinv/invert_large.hpp"
#include "diffinv/oracle.hpp"
#include "diffinv/physics.hpp"

namespace diffinv::tables {

namespace {

// T, H-d, S_y, K, c1, 2L
constexpr std::array<DrainageRecord, 8> kField = {{
    {1, 1.38, 0.060008, 0.699145, 0.12102, 37.0724},
    {2, 1.32, 0.068582, 0.618233, 0.15924, 43.0858},
    {3, 1.28, 0.079471, 0.577552, 0.18471, 47.2058},
    {4, 1.24, 0.083937, 0.536315, 0.21656, 48.1586},
    {5, 1.20, 0.088337, 0.514509, 0.23567, 50.3109},
    {6, 1.17, 0.091103, 0.474715, 0.25478, 51.7023},
    {7, 1.13, 0.091103, 0.474715, 0.28026, 51.5545},
    {8, 1.06, 0.098332, 0.442264, 0.32484, 48.4832},
}};

constexpr std::array<double, 8> kFieldSpacings = {37, 43, 47, 48, 50, 52, 51, 49};

constexpr std::array<MoistureRecord, 9> kMoisture = {{
    {100, 1.82403},
    {150, 1.95529},
    {200, 2.00731},
    {250, 1.62311},
    {300, 1.25254},
    {400, 2.24899},
    {500, 1.32357},
    {600, 1.39667},
    {1000, 2.10569},
}};

struct DrainageInputs {
    double c1;
    double a_true;
    double A;
};

DrainageInputs drainage_inputs(const DrainageRecord& r, double h0, std::optional<double> d) {
    require_positive(r.T, "T");
    double c1;
    if (r.c1) {
        c1 = *r.c1;
        require_unit_interval(c1, "c1");
    } else {
        DrainageScenario s;
        s.h0 = h0;
        s.d = d.value_or(0.0);
        s.H = s.d + r.H_minus_d;
        c1 = physics::reduce_drainage(s);
    }
    const double a_true = oracle::true_a(c1);
    double A;
    if (r.spacing) {
        require_positive(*r.spacing, "spacing");
        const double L = 0.5 * *r.spacing;
        A = a_true * L * L / r.T;
    } else {
        if (!d) throw DomainError("record without a printed spacing needs d to derive A from the soil");
        A = diffusion_from_soil(r.K, r.S_y, *d, h0);
    }
    return {c1, a_true, A};
}

}  // namespace

ThresholdRow fourier_threshold(int N, double re_limit, double step) {
    if (N < 0 || N > 3) throw DomainError("threshold order must be 0..3");
    require_positive(re_limit, "re_limit");
    require_positive(step, "step");
    auto fails = [N, re_limit](double c) {
        return !(composite::relative_error(c, invert_large::invert_fourier_N(c, N)).re_percent <= re_limit);
    };
    const int top = static_cast<int>(std::floor(0.999 / step + 1e-9));
    if (fails(top * step)) throw DomainError("order-N inversion misses the limit already at the top of the scan");
    int k = top - 1;
    while (k >= 1 && !fails(k * step)) --k;
    if (k < 1) throw DomainError("order-N inversion never misses the limit on the scan");
    double lo = k * step;
    double hi = (k + 1) * step;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (fails(mid) ? lo : hi) = mid;
    }
    return {N, hi, oracle::true_a(hi)};
}

std::vector<ThresholdRow> threshold_table(double re_limit, double step) {
    std::vector<ThresholdRow> rows;
    for (int N = 0; N <= 3; ++N) rows.push_back(fourier_threshold(N, re_limit, step));
    return rows;
}

std::span<const DrainageRecord> field_records() { return kField; }
std::span<const double> field_spacings() { return kFieldSpacings; }
std::span<const MoistureRecord> moisture_records() { return kMoisture; }

std::vector<SpacingRow> spacing_table(std::span<const DrainageRecord> records, double h0, std::optional<double> d,
                                      const contour::QuadratureSpec& q) {
    require_positive(h0, "h0");
    std::vector<SpacingRow> rows;
    for (const auto& r : records) {
        const auto in = drainage_inputs(r, h0, d);
        SpacingRow row;
        row.T = r.T;
        row.c1 = in.c1;
        row.A = in.A;
        row.spacing_true = 2.0 * std::sqrt(in.A * r.T / in.a_true);
        for (std::size_t j = 0; j < kColumns.size(); ++j) {
            row.spacing[j] = 2.0 * std::sqrt(in.A * r.T / estimate_a(in.c1, kColumns[j], q));
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<TimeRow> time_table(std::span<const DrainageRecord> records, std::span<const double> spacings, double h0,
                                std::optional<double> d, const contour::QuadratureSpec& q) {
    require_positive(h0, "h0");
    if (spacings.size() != records.size()) throw DomainError("need one spacing per record");
    std::vector<TimeRow> rows;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto in = drainage_inputs(records[i], h0, d);
        require_positive(spacings[i], "spacing");
        const double L = 0.5 * spacings[i];
        TimeRow row;
        row.spacing = spacings[i];
        row.T_true = in.a_true * L * L / in.A;
        for (std::size_t j = 0; j < kColumns.size(); ++j) {
            row.T[j] = estimate_a(in.c1, kColumns[j], q) * L * L / in.A;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<DiffusivityRow> diffusivity_table(std::span<const MoistureRecord> records,
                                              const contour::QuadratureSpec& q) {
    std::vector<DiffusivityRow> rows;
    for (const auto& r : records) {
        const auto s = physics::moisture_scenario(r.D0, r.T, q);
        DiffusivityRow row;
        row.T = r.T;
        row.D0_true = r.D0;
        row.Theta = *s.Theta;
        row.c2 = physics::reduce_infiltration(s);
        for (std::size_t j = 0; j < kColumns.size(); ++j) {
            row.D0[j] = physics::solve_diffusivity(s, kColumns[j], q);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace diffinv::tables
