#include "diffinv/invert_large.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "diffinv/common.hpp"

namespace diffinv::invert_large {

namespace {

using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<300>>;

int triangular(int n) { return n * (n + 1) / 2; }

// Coefficients of F(y) = Σ_{n≤N} (-1)ⁿ y^{T_n}/(2n+1), T_n = n(n+1)/2, up to y^order.
std::vector<Rational> truncated_series(int N, int order) {
    std::vector<Rational> F(order + 1, Rational(0));
    for (int n = 0; n <= N; ++n) {
        const int t = triangular(n);
        if (t <= order) F[t] = Rational(n % 2 == 0 ? 1 : -1, 2 * n + 1);
    }
    return F;
}

// [y^0..y^order] of F^alpha for F_0 = 1 (J.C.P. Miller recurrence).
std::vector<Rational> series_power(const std::vector<Rational>& F, int alpha, int order) {
    std::vector<Rational> G(order + 1, Rational(0));
    G[0] = 1;
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += Rational((alpha + 1) * j - k) * F[j] * G[k - j];
        }
        G[k] = acc / k;
    }
    return G;
}

struct BnKey {
    double c;
    double tol;
    double r_max;
    int n;
    auto operator<=>(const BnKey&) const = default;
};

class BnCache {
public:
    std::optional<double> find(const BnKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }
    void store(const BnKey& key, double value) {
        std::unique_lock lock(mutex_);
        values_.emplace(key, value);
    }
    void clear() {
        std::unique_lock lock(mutex_);
        values_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<BnKey, double> values_;
};

BnCache& bn_cache() {
    static BnCache cache;
    return cache;
}

double cached_bn(int n, double c, const contour::QuadratureSpec& q) {
    const BnKey key{c, q.tol, q.r_max.value_or(-1.0), n};
    if (auto hit = bn_cache().find(key)) return *hit;
    const double value = contour::eval_bn(n, c, q);
    bn_cache().store(key, value);
    return value;
}

double poly_value(const std::vector<double>& p, double x) {
    double v = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

double poly_derivative(const std::vector<double>& p, double x) {
    double v = 0.0;
    for (std::size_t i = p.size() - 1; i >= 1; --i) v = v * x + static_cast<double>(i) * p[i];
    return v;
}

}  // namespace

InversionCoefficients gen_inversion_coeffs(int N) {
    if (N < 0 || N > 3) {
        throw DomainError("gen_inversion_coeffs supports 0 <= N <= 3, got " + std::to_string(N));
    }
    InversionCoefficients out;
    out.N = N;
    out.M = triangular(N);
    const int M = out.M;
    const auto F = truncated_series(N, M);

    // Lagrange–Bürmann: w = γ/F(w⁸) gives [γ^{8n+1}] w = [yⁿ] F(y)^{-(8n+1)} / (8n+1).
    out.g.assign(M + 1, Rational(0));
    out.g[0] = 1;
    for (int n = 1; n <= M; ++n) {
        const int power = 8 * n + 1;
        const auto G = series_power(F, -power, n);
        out.g[n] = G[n] / power;
    }

    // ln(1 + Σ g_n xⁿ): n L_n = n U_n - Σ_{k<n} k L_k U_{n-k}.
    out.f.assign(M, Rational(0));
    for (int n = 1; n <= M; ++n) {
        Rational acc = Rational(n) * out.g[n];
        for (int k = 1; k < n; ++k) {
            acc -= Rational(k) * out.f[k - 1] * out.g[n - k];
        }
        out.f[n - 1] = acc / n;
    }
    return out;
}

double certification_residual_log10(int N, double log10_gamma) {
    const auto coeffs = gen_inversion_coeffs(N);
    const HighPrecision gamma = pow(HighPrecision(10), HighPrecision(log10_gamma));
    const HighPrecision g8 = pow(gamma, 8);

    HighPrecision w = 0;
    HighPrecision gp = gamma;
    for (int n = 0; n <= coeffs.M; ++n) {
        const auto& r = coeffs.g[n];
        w += HighPrecision(numerator(r)) / HighPrecision(denominator(r)) * gp;
        gp *= g8;
    }
    HighPrecision lhs = 0;
    for (int n = 0; n <= N; ++n) {
        const int m = 2 * n + 1;
        const HighPrecision term = pow(w, m * m) / m;
        lhs += (n % 2 == 0) ? term : HighPrecision(-term);
    }
    const HighPrecision residual = abs(lhs - gamma);
    if (residual == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(log10(residual));
}

double certification_slope(int N) {
    constexpr std::array<double, 3> xs = {-2.0, -2.5, -3.0};
    std::array<double, 3> ys{};
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = certification_residual_log10(N, xs[i]);
    if (!std::isfinite(ys[0])) {
        return std::numeric_limits<double>::infinity();
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / 3.0;
        my += ys[i] / 3.0;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

double invert_first_order(double c) {
    return a_star(c);
}

double invert_fourier_terms(double c, int terms) {
    if (terms < 0 || terms > static_cast<int>(kLogCoefficients.size())) {
        throw DomainError("invert_fourier_terms supports 0..6 correction terms");
    }
    const double a = a_star(c);
    const double gamma = kPi / 4.0 * (1.0 - c);
    const double g8 = std::pow(gamma, 8);
    double correction = 0.0;
    double gp = g8;
    for (int n = 1; n <= terms; ++n) {
        correction += kLogCoefficients[n - 1] * gp;
        gp *= g8;
    }
    return a - kFourOverPiSq * correction;
}

double invert_fourier_N(double c, int N) {
    if (N < 0 || N > 3) {
        throw DomainError("invert_fourier_N supports 0 <= N <= 3, got " + std::to_string(N));
    }
    return invert_fourier_terms(c, triangular(N));
}

EpsilonExpansion epsilon_expansion(double c, int K, const contour::QuadratureSpec& q) {
    if (K != 2 && K != 4) throw DomainError("epsilon expansion degree must be 2 or 4");
    EpsilonExpansion e;
    e.a_star = a_star(c);
    e.K = K;
    e.b.reserve(K + 1);
    for (int n = 0; n <= K; ++n) e.b.push_back(cached_bn(n, c, q));
    return e;
}

double invert_epsilon_poly(double c, int K, const contour::QuadratureSpec& q) {
    const auto e = epsilon_expansion(c, K, q);
    std::vector<double> p = e.b;
    p[0] -= c;

    // A root whose effect on c is below the quadrature noise is ε = 0.
    const double snap = 10.0 * q.tol / std::max(std::abs(p[1]), 1e-300);
    auto admissible = [&](double eps) -> std::optional<double> {
        if (eps > 0.0 && eps < e.a_star) return eps;
        if (eps <= 0.0 && -eps <= snap) return 0.0;
        return std::nullopt;
    };

    std::optional<double> eps;
    if (K == 2) {
        const double disc = p[1] * p[1] - 4.0 * p[2] * p[0];
        if (disc < 0.0) {
            throw DomainError("quadratic epsilon scheme: negative discriminant at c=" + std::to_string(c));
        }
        // (-b1 - √disc)/(2b2), rationalised to avoid cancellation as c → 1.
        const double denom = -p[1] + std::sqrt(disc);
        const double root = denom != 0.0 ? 2.0 * p[0] / denom : (-p[1] - std::sqrt(disc)) / (2.0 * p[2]);
        eps = admissible(root);
    } else {
        const auto roots = solve_quartic({p[0], p[1], p[2], p[3], p[4]});
        for (const auto& r : roots) {
            if (std::abs(r.imag()) >= 1e-9 * std::max(1.0, std::abs(r.real()))) continue;
            if (auto cand = admissible(r.real()); cand && (!eps || *cand < *eps)) eps = cand;
        }
    }
    if (!eps) {
        throw DomainError("epsilon scheme (K=" + std::to_string(K) + "): no real root in (0, a*) at c=" +
                          std::to_string(c));
    }
    double root = *eps;
    if (root > 0.0) {
        const double dp = poly_derivative(p, root);
        if (dp != 0.0) {
            const double polished = root - poly_value(p, root) / dp;
            if (polished > 0.0 && polished < e.a_star) root = polished;
        }
    }
    return e.a_star - root;
}

void clear_bn_cache() {
    bn_cache().clear();
}

}  // namespace diffinv::invert_large
