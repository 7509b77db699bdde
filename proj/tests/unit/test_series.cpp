#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "diffinv/common.hpp"
#include "diffinv/errors.hpp"
#include "diffinv/series.hpp"
#include "oracles.hpp"

using namespace diffinv::series;

TEST_SUITE("series") {

TEST_CASE("I_fourier values") {
    CHECK(I_fourier(4.0 / (std::numbers::pi * std::numbers::pi)) == doctest::Approx(0.532).epsilon(0.0005 / 0.532));
    CHECK(I_fourier(0.405) == doctest::Approx(0.531325).epsilon(1e-6));
    CHECK(I_fourier(0.1) == doctest::Approx(0.0506946).epsilon(1e-6));
    const double pi = std::numbers::pi;
    CHECK(std::abs(I_fourier(10.0) - (1.0 - 4.0 / pi * std::exp(-10.0 * pi * pi / 4.0))) <= 1e-15);
}

TEST_CASE("I_fourier against long-double oracle") {
    for (double a = 0.02; a <= 8.0; a += 0.01) {
        CHECK(std::abs(I_fourier(a) - oracles::I_fourier_ld(a)) <= 2.0 * std::numeric_limits<double>::epsilon());
    }
}

TEST_CASE("I_erfc_sum values") {
    const double ref = 2.0 * oracles::erfc_quadrature(1.0 / (2.0 * std::sqrt(0.1))) -
                       2.0 * oracles::erfc_quadrature(3.0 / (2.0 * std::sqrt(0.1)));
    CHECK(I_erfc_sum(0.1) == doctest::Approx(ref).epsilon(1e-13));
    CHECK(I_erfc_sum(0.238) == doctest::Approx(0.295).epsilon(2e-3));
    CHECK(I_erfc_sum(2e-3) > 0.0);
    CHECK(I_erfc_sum(2e-3) < 1e-50);
    CHECK(I_erfc_sum(1e-3) < I_erfc_sum(2e-3));
}

TEST_CASE("both representations agree") {
    for (int i = 1; i <= 300; ++i) {
        const double a = 0.001 * i;
        CHECK(std::abs(I_fourier(a) - I_erfc_sum(a)) <= 1e-12);
    }
}

TEST_CASE("alternating-series bound on partial sums") {
    const double pi = std::numbers::pi;
    for (double a : {0.05, 0.1, 0.3, 1.0}) {
        double partial = 1.0;
        const double exact = oracles::I_fourier_ld(a);
        for (int n = 0; n < 6; ++n) {
            const double k = (2 * n + 1) * pi / 2;
            partial -= (n % 2 ? -1.0 : 1.0) * 2.0 / k * std::exp(-a * k * k);
            const double k1 = (2 * n + 3) * pi / 2;
            const double next = 2.0 / k1 * std::exp(-a * k1 * k1);
            CHECK(std::abs(partial - exact) <= next + 1e-16);
        }
    }
}

TEST_CASE("I_exact switches representation without a seam") {
    CHECK(std::abs(I_exact(0.05 - 1e-12) - I_exact(0.05)) <= 1e-11);
    CHECK(I_exact(50.0) == 1.0);
}

TEST_CASE("b0 is I at a*") {
    CHECK(eval_bn_residue(0, 0.5) == doctest::Approx(0.5001).epsilon(1e-4));
    for (double c = 0.05; c < 0.951; c += 0.01) {
        CHECK(eval_bn_residue(0, c) == I_fourier(diffinv::a_star(c)));
    }
}

TEST_CASE("truncation failure") {
    SeriesTruncation tr;
    tr.max_terms = 2;
    CHECK_THROWS_AS(I_fourier(1e-3, tr), diffinv::ToleranceError);
    tr = {};
    tr.term_tol = -1.0;
    CHECK_THROWS_AS(I_fourier(0.1, tr), diffinv::DomainError);
}

TEST_CASE("domain") {
    CHECK_THROWS_AS(I_fourier(0.0), diffinv::DomainError);
    CHECK_THROWS_AS(I_erfc_sum(-1.0), diffinv::DomainError);
    CHECK_THROWS_AS(eval_bn_residue(5, 0.5), diffinv::DomainError);
    CHECK_THROWS_AS(eval_bn_residue(1, 1.0), diffinv::DomainError);
}

}
