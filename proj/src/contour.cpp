#include "diffinv/contour.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "diffinv/common.hpp"
#include "diffinv/series.hpp"

namespace diffinv::contour {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

constexpr double kRMin = 2.0;
constexpr double kRMax = 40.0;
constexpr double kRStep = 0.25;

// 1/cos k = 2e^{ik}/(1+e^{2ik}); stable for Im k > 0 where cos k overflows.
cplx sec_upper(cplx k) {
    const cplx e = std::exp(kI * k);
    return 2.0 * e / (1.0 + e * e);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

class Hyperbola {
public:
    Hyperbola(double a, const Kernel& phi) : a_(a), phi_(phi) {
        scale_ = a > 1.0 ? 1.0 / std::sqrt(a) : 1.0;
    }

    double effective_a() const { return a_ * scale_ * scale_; }

    // e^{-a k²} φ(k) dk/dr at parameter r.
    cplx operator()(double r) const {
        const double sh = std::sinh(r);
        const double ch = std::cosh(r);
        const cplx k = scale_ * cplx(2.0 * sh, ch);
        const cplx dk = scale_ * cplx(2.0 * ch, sh);
        return std::exp(-a_ * k * k) * phi_(k) * dk;
    }

private:
    double a_;
    double scale_;
    const Kernel& phi_;
};

double initial_r_max(double a_eff, double tol) {
    if (a_eff <= 0.0) return kRMin;
    const double arg = (std::log(1.0 / tol) + std::log(1.0 / a_eff)) / (3.0 * a_eff);
    return std::clamp(std::asinh(std::sqrt(std::max(arg, 0.0))), kRMin, kRMax);
}

double envelope(const Hyperbola& g, double r) {
    return std::max({std::abs(g(r)), std::abs(g(-r)), std::abs(g(r - 0.1)), std::abs(g(0.1 - r))});
}

cplx composite_gauss(const Hyperbola& g, double r_max, int panels) {
    using Rule = boost::math::quadrature::gauss<double, 16>;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double width = 2.0 * r_max / panels;
    const double half = 0.5 * width;
    cplx sum{0.0, 0.0};
    for (int p = 0; p < panels; ++p) {
        const double mid = -r_max + (p + 0.5) * width;
        cplx panel{0.0, 0.0};
        for (std::size_t i = 0; i < x.size(); ++i) {
            panel += w[i] * (g(mid + half * x[i]) + g(mid - half * x[i]));
        }
        sum += half * panel;
    }
    return sum;
}

double real_with_check(const ContourResult& res, const QuadratureSpec& q, const char* what) {
    if (!std::isfinite(res.value.real()) || std::abs(res.value.imag()) > 10.0 * q.tol) {
        throw ToleranceError(std::string(what) + ": imaginary residual " + std::to_string(res.value.imag()) +
                             " exceeds 10*tol");
    }
    return res.value.real();
}

}  // namespace

void QuadratureSpec::validate() const {
    if (r_max && !(*r_max > 0.0)) throw DomainError("QuadratureSpec.r_max must be positive");
    if (n_nodes < 8) throw DomainError("QuadratureSpec.n_nodes must be at least 8");
    if (!(tol > 0.0)) throw DomainError("QuadratureSpec.tol must be positive");
    if (max_nodes < n_nodes) throw DomainError("QuadratureSpec.max_nodes must be >= n_nodes");
}

ContourResult integrate(double a, const Kernel& phi, const QuadratureSpec& q) {
    q.validate();
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("contour integration requires finite a >= 0");
    }
    const Hyperbola g(a, phi);

    double r_max = q.r_max.value_or(initial_r_max(g.effective_a(), q.tol));
    if (!q.r_max) {
        while (r_max < kRMax && envelope(g, r_max) >= 1e-2 * q.tol) {
            r_max += kRStep;
        }
    }

    int panels = std::max(1, q.n_nodes / 16);
    cplx prev = composite_gauss(g, r_max, panels);
    for (;;) {
        panels *= 2;
        if (panels * 16 > q.max_nodes) {
            throw ToleranceError("contour quadrature did not reach tol=" + std::to_string(q.tol) + " within " +
                                 std::to_string(q.max_nodes) + " nodes");
        }
        const cplx cur = composite_gauss(g, r_max, panels);
        if (std::abs(cur - prev) / kPi <= q.tol) {
            return {kI / kPi * cur, r_max, panels * 16};
        }
        prev = cur;
    }
}

double eval_I_contour(double a, const QuadratureSpec& q) {
    require_positive(a, "a");
    const Kernel phi = [](cplx k) { return sec_upper(k) / k; };
    return real_with_check(integrate(a, phi, q), q, "eval_I");
}

double eval_I(double a, const QuadratureSpec& q) {
    require_positive(a, "a");
    if (a < 0.02) {
        return series::I_erfc_sum(a);
    }
    return eval_I_contour(a, q);
}

double eval_bn(int n, double c, const QuadratureSpec& q) {
    if (n < 0 || n > 4) throw DomainError("eval_bn supports 0 <= n <= 4");
    const double as = a_star(c);
    const double inv_fact = 1.0 / factorial(n);
    const int power = 2 * n - 1;
    const Kernel phi = [power, inv_fact](cplx k) { return inv_fact * std::pow(k, power) * sec_upper(k); };
    return real_with_check(integrate(as, phi, q), q, "eval_bn");
}

double eval_algebraic_moment(int n, const QuadratureSpec& q) {
    if (n < 1) throw DomainError("eval_algebraic_moment requires n >= 1");
    const int power = 2 * n - 1;
    const Kernel phi = [power](cplx k) { return std::pow(k, power) * sec_upper(k); };
    return real_with_check(integrate(0.0, phi, q), q, "eval_algebraic_moment");
}

double eval_h(double x, double t, const DrainageScenario& s, const QuadratureSpec& q) {
    require_positive(s.h0, "h0");
    if (!s.L || !s.A) throw DomainError("eval_h needs L and A on the scenario");
    const double L = *s.L;
    require_positive(L, "L");
    require_positive(*s.A, "A");
    require_positive(t, "t");
    if (!(x >= 0.0 && x <= L)) throw DomainError("eval_h requires 0 <= x <= L");

    if (x == 0.0) return s.d;
    const double a = *s.A * t / (L * L);
    double integral;
    if (x == L) {
        integral = eval_I(a, q);
    } else {
        // cos(k(ξ-1))/cos k = (e^{ikξ} + e^{ik(2-ξ)}) / (1 + e^{2ik}), with λL = k.
        const double xi = x / L;
        const Kernel phi = [xi](cplx k) {
            const cplx num = std::exp(kI * k * xi) + std::exp(kI * k * (2.0 - xi));
            return num / (k * (1.0 + std::exp(2.0 * kI * k)));
        };
        integral = real_with_check(integrate(a, phi, q), q, "eval_h");
    }
    const double h = s.d + s.h0 - s.h0 * integral;
    return std::clamp(h, s.d, s.d + s.h0);
}

double eval_theta(double x, double t, const InfiltrationScenario& s, const QuadratureSpec& q) {
    if (!(s.theta1 > s.theta0)) throw DomainError("eval_theta requires theta1 > theta0");
    if (!s.D0) throw DomainError("eval_theta needs D0 on the scenario");
    require_positive(s.L, "L");
    require_positive(*s.D0, "D0");
    require_positive(t, "t");
    if (!(x >= 0.0 && x <= s.L)) throw DomainError("eval_theta requires 0 <= x <= L");

    if (x == 0.0) return s.theta1;
    if (x == s.L) return s.theta0;
    const double a = 4.0 * *s.D0 * t / (s.L * s.L);
    const double xi = x / s.L;
    double integral;
    if (2.0 * x == s.L) {
        integral = 0.5 * eval_I(a, q);
    } else {
        // sin(2k(1-ξ))/sin 2k = (e^{2ikξ} - e^{2ik(2-ξ)}) / (1 - e^{4ik}), with λL = 2k.
        const Kernel phi = [xi](cplx k) {
            const cplx num = std::exp(2.0 * kI * k * xi) - std::exp(2.0 * kI * k * (2.0 - xi));
            return num / (k * (1.0 - std::exp(4.0 * kI * k)));
        };
        integral = real_with_check(integrate(a, phi, q), q, "eval_theta");
    }
    const double theta = s.theta0 + (s.theta1 - s.theta0) * integral;
    return std::clamp(theta, s.theta0, s.theta1);
}

}  // namespace diffinv::contour
