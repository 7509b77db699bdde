#include "diffinv/physics.hpp"

#include <cmath>
#include <random>

#include "diffinv/common.hpp"

namespace diffinv {

double diffusion_from_soil(double K, double S_y, double d, double h0) {
    require_positive(K, "K");
    require_positive(S_y, "S_y");
    require_positive(h0, "h0");
    if (!(d >= 0.0)) throw DomainError("d must be non-negative");
    return K * (d + 0.5 * h0) / S_y;
}

}  // namespace diffinv

namespace diffinv::physics {

namespace {

constexpr double kSimTheta0 = 0.05;
constexpr double kSimTheta1 = 0.4;
constexpr double kSimL = 100.0;

double need(const std::optional<double>& v, const char* what) {
    if (!v) throw DomainError(std::string(what) + " is required for this problem");
    require_positive(*v, what);
    return *v;
}

}  // namespace

double reduce_drainage(const DrainageScenario& s) {
    require_positive(s.h0, "h0");
    const double drop = s.head_above_drain();
    if (!(drop > 0.0 && drop < s.h0)) {
        throw AdmissibilityError("drainage data inadmissible: need d < H < d + h0");
    }
    return 1.0 - drop / s.h0;
}

double reduce_infiltration(const InfiltrationScenario& s) {
    if (!(s.theta0 > 0.0 && s.theta1 > s.theta0)) throw DomainError("need theta1 > theta0 > 0");
    if (!s.Theta) throw DomainError("Theta is required");
    const double th = *s.Theta;
    if (!(th > s.theta0 && th < 0.5 * (s.theta0 + s.theta1))) {
        throw AdmissibilityError("moisture datum inadmissible: need theta0 < Theta < (theta0 + theta1)/2");
    }
    return 2.0 * (th - s.theta0) / (s.theta1 - s.theta0);
}

double drainage_a(double A, double T, double L) {
    require_positive(A, "A");
    require_positive(T, "T");
    require_positive(L, "L");
    return A * T / (L * L);
}

double infiltration_a(double D0, double T, double L) {
    require_positive(D0, "D0");
    require_positive(T, "T");
    require_positive(L, "L");
    return 4.0 * D0 * T / (L * L);
}

double solve_drain_spacing(const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q) {
    const double A = need(s.A, "A");
    const double T = need(s.T, "T");
    const double a = estimate_a(reduce_drainage(s), scheme, q);
    return std::sqrt(A * T / a);
}

double solve_drain_time(const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q) {
    const double A = need(s.A, "A");
    const double L = need(s.L, "L");
    const double a = estimate_a(reduce_drainage(s), scheme, q);
    return a * L * L / A;
}

double solve_diffusivity(const InfiltrationScenario& s, SchemeId scheme, const contour::QuadratureSpec& q) {
    require_positive(s.L, "L");
    const double T = need(s.T, "T");
    const double a = estimate_a(reduce_infiltration(s), scheme, q);
    return a * s.L * s.L / (4.0 * T);
}

double solve_ip(InverseProblem p, const DrainageScenario& s, SchemeId scheme, const contour::QuadratureSpec& q) {
    switch (p) {
        case InverseProblem::DrainSpacing: return solve_drain_spacing(s, scheme, q);
        case InverseProblem::DrainTime: return solve_drain_time(s, scheme, q);
        case InverseProblem::Diffusivity: break;
    }
    throw DomainError("diffusivity problem needs an infiltration scenario");
}

double solve_ip(InverseProblem p, const InfiltrationScenario& s, SchemeId scheme, const contour::QuadratureSpec& q) {
    if (p != InverseProblem::Diffusivity) throw DomainError("drain problems need a drainage scenario");
    return solve_diffusivity(s, scheme, q);
}

double glover_dumm(InverseProblem p, const DrainageScenario& s) {
    reduce_drainage(s);
    const double lg = std::log(4.0 * s.h0 / (kPi * s.head_above_drain()));
    switch (p) {
        case InverseProblem::DrainSpacing: {
            const double A = need(s.A, "A");
            const double T = need(s.T, "T");
            return std::sqrt(kPi * kPi * A * T / (4.0 * lg));
        }
        case InverseProblem::DrainTime: {
            const double A = need(s.A, "A");
            const double L = need(s.L, "L");
            return 4.0 * L * L / (kPi * kPi * A) * lg;
        }
        case InverseProblem::Diffusivity: break;
    }
    throw DomainError("diffusivity problem needs an infiltration scenario");
}

double glover_dumm(InverseProblem p, const InfiltrationScenario& s) {
    if (p != InverseProblem::Diffusivity) throw DomainError("drain problems need a drainage scenario");
    reduce_infiltration(s);
    require_positive(s.L, "L");
    const double T = need(s.T, "T");
    const double lg = std::log(4.0 / kPi * (s.theta1 - s.theta0) / (s.theta1 + s.theta0 - 2.0 * *s.Theta));
    return s.L * s.L / (kPi * kPi * T) * lg;
}

InfiltrationScenario moisture_scenario(double D0, double T, const contour::QuadratureSpec& q) {
    InfiltrationScenario s;
    s.theta0 = kSimTheta0;
    s.theta1 = kSimTheta1;
    s.L = kSimL;
    s.T = T;
    s.D0 = D0;
    infiltration_a(D0, T, kSimL);
    s.Theta = contour::eval_theta(0.5 * kSimL, T, s, q);
    return s;
}

std::vector<InfiltrationScenario> simulate_moisture(std::uint64_t seed, int n, std::span<const double> times,
                                                    const contour::QuadratureSpec& q) {
    if (n < 1) throw DomainError("n must be at least 1");
    if (times.empty()) throw DomainError("at least one time is required");
    std::mt19937_64 rng(seed);
    std::vector<InfiltrationScenario> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double delta = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        out.push_back(moisture_scenario(1.2 * (1.0 + delta), times[static_cast<std::size_t>(i) % times.size()], q));
    }
    return out;
}

}  // namespace diffinv::physics
