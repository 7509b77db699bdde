#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "diffinv/composite.hpp"
#include "diffinv/contour.hpp"
#include "diffinv/errors.hpp"
#include "diffinv/invert_large.hpp"
#include "diffinv/oracle.hpp"
#include "diffinv/series.hpp"
#include "oracles.hpp"

using namespace diffinv;
using namespace diffinv::invert_large;

namespace {

double re_of(double c, double a) { return composite::relative_error(c, a).re_percent; }

Rational q(long long n, long long d) { return Rational(n, d); }

}  // namespace

TEST_SUITE("invert_large") {

TEST_CASE("first order") {
    CHECK(invert_first_order(0.531) == doctest::Approx(0.405).epsilon(1e-3));
    CHECK(invert_first_order(0.2) == doctest::Approx(0.18839).epsilon(1e-4));
    CHECK(re_of(0.2, invert_first_order(0.2)) == doctest::Approx(3.2).epsilon(0.1 / 3.2));
    const double pi = std::numbers::pi;
    CHECK(invert_first_order(1.0 - 4.0 / pi * std::exp(-pi * pi / 4.0)) == doctest::Approx(1.0).epsilon(1e-13));
    double prev = 0.0;
    for (int i = 1; i <= 999; ++i) {
        const double a = invert_first_order(0.001 * i);
        CHECK(a > prev);
        prev = a;
    }
    CHECK_THROWS_AS(invert_first_order(1.0), DomainError);
}

TEST_CASE("coefficients are the exact rationals") {
    const auto co = gen_inversion_coeffs(3);
    REQUIRE(co.M == 6);
    REQUIRE(co.g.size() == 7);
    REQUIRE(co.f.size() == 6);
    CHECK(co.g[0] == 1);
    const std::vector<Rational> g = {q(1, 3), q(1, 1), q(62, 15), q(2669, 135), q(13846, 135), q(317783, 567)};
    const std::vector<Rational> f = {q(1, 3),         q(17, 18),        q(1544, 405),
                                     q(29161, 1620),  q(112504, 1215),  q(192488308, 382725)};
    for (int n = 0; n < 6; ++n) {
        CHECK(co.g[n + 1] == g[n]);
        CHECK(co.f[n] == f[n]);
        CHECK(kLogCoefficients[n] == static_cast<double>(f[n]));
    }
}

TEST_CASE("lower orders") {
    const auto c0 = gen_inversion_coeffs(0);
    CHECK(c0.M == 0);
    CHECK(c0.f.empty());
    const auto c1 = gen_inversion_coeffs(1);
    CHECK(c1.M == 1);
    CHECK(c1.g[1] == q(1, 3));
    CHECK(c1.f[0] == q(1, 3));
    // lower truncations share the leading coefficients
    const auto c2 = gen_inversion_coeffs(2);
    CHECK(c2.M == 3);
    CHECK(c2.f[2] == q(1544, 405));
    CHECK_THROWS_AS(gen_inversion_coeffs(4), DomainError);
    CHECK_THROWS_AS(gen_inversion_coeffs(-1), DomainError);
}

TEST_CASE("certification slope") {
    for (int N = 1; N <= 3; ++N) {
        const int M = N * (N + 1) / 2;
        CHECK(certification_slope(N) >= 8 * M + 8.5);
    }
}

TEST_CASE("Fourier-order inversions") {
    CHECK(invert_fourier_N(0.316, 1) == doctest::Approx(0.251).epsilon(2e-3));
    CHECK(invert_fourier_N(0.172, 2) == doctest::Approx(0.169).epsilon(3e-3));
    CHECK(invert_fourier_N(0.102, 3) == doctest::Approx(0.131).epsilon(3e-3));
    for (double c : {0.1, 0.5, 0.9}) CHECK(invert_fourier_N(c, 0) == invert_first_order(c));
    CHECK_THROWS_AS(invert_fourier_N(0.5, 4), DomainError);
    CHECK_THROWS_AS(invert_fourier_terms(0.5, 7), DomainError);
}

TEST_CASE("higher order never loses accuracy") {
    // RE differences below 1e-12 % are rounding in the reconstruction itself.
    for (int N = 0; N < 3; ++N) {
        for (int i = 102; i <= 999; ++i) {
            const double c = 0.001 * i;
            CHECK(re_of(c, invert_fourier_N(c, N + 1)) <= re_of(c, invert_fourier_N(c, N)) + 1e-12);
        }
    }
}

TEST_CASE("Table 1 regime") {
    struct Row {
        int N;
        double c_min;
    };
    // printed c_min is rounded to 3 decimals, so start half a unit above it
    for (const Row r : {Row{0, 0.531}, Row{1, 0.316}, Row{2, 0.172}, Row{3, 0.102}}) {
        for (int i = 0; i < 200; ++i) {
            const double c = r.c_min + 0.0005 + (0.999 - r.c_min - 0.0005) * i / 199.0;
            CHECK(re_of(c, invert_fourier_N(c, r.N)) <= 0.01);
        }
    }
}

TEST_CASE("quadratic scheme") {
    const double a = invert_epsilon_poly(0.124, 2);
    CHECK(a == doctest::Approx(0.144).epsilon(3e-3));
    CHECK(re_of(0.5, invert_epsilon_poly(0.5, 2)) < 1e-2);
    CHECK(std::abs(series::I_fourier(invert_epsilon_poly(0.5, 2)) - 0.5) / 0.5 < 1e-4);
    for (int i = 13; i <= 99; ++i) {
        const double c = 0.01 * i;
        const auto e = epsilon_expansion(c, 2);
        const double eps = e.a_star - invert_epsilon_poly(c, 2);
        CHECK(eps >= 0.0);
        CHECK(eps < e.a_star);
    }
    for (int i = 125; i <= 999; ++i) {
        const double c = 0.001 * i;
        CHECK(re_of(c, invert_epsilon_poly(c, 2)) <= 0.01);
    }
}

TEST_CASE("quartic scheme") {
    CHECK(invert_epsilon_poly(0.036, 4) == doctest::Approx(0.089).epsilon(5e-3));
    for (int i = 37; i <= 999; ++i) {
        const double c = 0.001 * i;
        CHECK(re_of(c, invert_epsilon_poly(c, 4)) <= 0.01);
    }
    CHECK_THROWS_AS(invert_epsilon_poly(0.002, 4), DomainError);
    CHECK_THROWS_AS(invert_epsilon_poly(0.5, 3), DomainError);
}

TEST_CASE("epsilon expansion") {
    const auto e = epsilon_expansion(0.3, 4);
    CHECK(e.K == 4);
    REQUIRE(e.b.size() == 5);
    CHECK(e.a_star == invert_first_order(0.3));
    for (int n = 0; n <= 4; ++n) CHECK(e.b[n] == doctest::Approx(series::eval_bn_residue(n, 0.3)).epsilon(1e-9));
}

TEST_CASE("b_n cache gives the same value cold and warm, and under concurrency") {
    clear_bn_cache();
    const double cold = invert_epsilon_poly(0.42, 4);
    const double warm = invert_epsilon_poly(0.42, 4);
    CHECK(cold == warm);
    clear_bn_cache();
    std::vector<double> grid;
    for (int i = 0; i < 40; ++i) grid.push_back(0.2 + 0.015 * i);
    std::vector<double> out(grid.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double v = invert_epsilon_poly(grid[(i + t) % grid.size()], 2);
                if (t == 0) out[i] = v;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(out[i] == invert_epsilon_poly(grid[i], 2));
}

TEST_CASE("Ferrari solver") {
    // (x-1)(x-2)(x-3)(x-4)
    auto r = solve_quartic({24.0, -50.0, 35.0, -10.0, 1.0});
    std::vector<double> re;
    for (auto z : r) {
        CHECK(std::abs(z.imag()) < 1e-12);
        re.push_back(z.real());
    }
    std::sort(re.begin(), re.end());
    for (int i = 0; i < 4; ++i) CHECK(re[i] == doctest::Approx(i + 1.0).epsilon(1e-12));
    // x⁴ + 1: four complex roots of modulus one
    r = solve_quartic({1.0, 0.0, 0.0, 0.0, 1.0});
    for (auto z : r) {
        CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(z * z * z * z + 1.0) < 1e-12);
    }
    // biquadratic x⁴ - 5x² + 4
    r = solve_quartic({4.0, 0.0, -5.0, 0.0, 1.0});
    for (auto z : r) CHECK(std::abs(((z * z) - 5.0) * (z * z) + 4.0) < 1e-12);
    CHECK_THROWS_AS(solve_quartic({1.0, 1.0, 1.0, 1.0, 0.0}), DomainError);
}

}
