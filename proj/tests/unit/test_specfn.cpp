#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/lambert_w.hpp>

#include "diffinv/errors.hpp"
#include "diffinv/specfn.hpp"
#include "oracles.hpp"

namespace sf = diffinv::specfn;
using sf::erfc_inv;
using sf::lambert_w0;
using sf::SpecFnConfig;
using diffinv::DomainError;

TEST_SUITE("specfn") {

TEST_CASE("erfc values") {
    CHECK(sf::erfc(0.0) == 1.0);
    CHECK(sf::erfc(1.5811388) == doctest::Approx(oracles::erfc_quadrature(1.5811388)).epsilon(1e-12));
    CHECK(sf::erfc(1.5811388) == doctest::Approx(0.02535).epsilon(1e-3));
    CHECK(sf::erfc(-0.7) == doctest::Approx(2.0 - sf::erfc(0.7)).epsilon(1e-15));
}

TEST_CASE("erfc matches quadrature of its integral") {
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        const double ref = oracles::erfc_quadrature(x);
        CHECK(std::abs(sf::erfc(x) - ref) <= 1e-14 * std::abs(ref) + 1e-300);
    }
}

TEST_CASE("erfc reflection") {
    for (double x = -6.0; x <= 6.0; x += 0.01) {
        CHECK(std::abs(sf::erfc(x) + sf::erfc(-x) - 2.0) <= 1e-13);
    }
}

TEST_CASE("erfc_inv examples") {
    CHECK(erfc_inv(1.0) == 0.0);
    CHECK(erfc_inv(0.5) == doctest::Approx(0.476936).epsilon(1e-6));
    CHECK(std::abs(erfc_inv(sf::erfc(1.3)) - 1.3) <= 1e-12);
}

TEST_CASE("erfc_inv round trip and residual") {
    for (int i = 1; i <= 199; ++i) {
        const double y = 0.01 * i;
        const double x = erfc_inv(y);
        CHECK(std::abs(sf::erfc(x) - y) <= 1e-13);
        CHECK(std::abs(x - boost::math::erfc_inv(y)) <= 1e-13 * std::max(1.0, std::abs(x)));
    }
}

TEST_CASE("erfc_inv deep tails") {
    for (double y : {1e-300, 1e-100, 1e-30, 1e-10, 2.0 - 1e-10, 2.0 - 1e-15}) {
        const double x = erfc_inv(y);
        CHECK(x == doctest::Approx(boost::math::erfc_inv(y)).epsilon(1e-13));
    }
}

TEST_CASE("erfc_inv strictly decreasing") {
    double prev = erfc_inv(1e-6);
    for (int i = 1; i < 2000; ++i) {
        const double x = erfc_inv(1e-6 + i * 1e-3);
        CHECK(x < prev);
        prev = x;
    }
}

TEST_CASE("erfc_inv domain") {
    CHECK_THROWS_AS(erfc_inv(0.0), DomainError);
    CHECK_THROWS_AS(erfc_inv(2.0), DomainError);
    CHECK_THROWS_AS(erfc_inv(-0.1), DomainError);
    CHECK_THROWS_AS(erfc_inv(std::nan("")), DomainError);
}

TEST_CASE("lambert_w0 examples") {
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(lambert_w0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lambert_w0(1.0) == doctest::Approx(0.567143).epsilon(1e-6));
}

TEST_CASE("lambert_w0 residual and Boost agreement") {
    for (int i = 0; i <= 1000; ++i) {
        const double x = 0.1 * i;
        const double w = lambert_w0(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
        CHECK(w == doctest::Approx(boost::math::lambert_w0(x)).epsilon(1e-14));
    }
    for (double x : {1e-300, 1e-12, 1e6, 1e30, 1e300}) {
        CHECK(lambert_w0(x) == doctest::Approx(boost::math::lambert_w0(x)).epsilon(1e-14));
    }
}

TEST_CASE("lambert_w0 domain") {
    CHECK_THROWS_AS(lambert_w0(-1e-9), DomainError);
    CHECK_THROWS_AS(lambert_w0(std::nan("")), DomainError);
}

TEST_CASE("config validation") {
    SpecFnConfig cfg;
    cfg.newton_tol = 0.0;
    CHECK_THROWS_AS(erfc_inv(0.5, cfg), DomainError);
    cfg = {};
    cfg.max_iter = 0;
    CHECK_THROWS_AS(lambert_w0(1.0, cfg), DomainError);
}

TEST_CASE("identity K(mu) = erfc(mu/2)") {
    for (double mu : {0.5, 1.0, 2.0, 4.0}) {
        CHECK(std::abs(oracles::K_mu(mu) - sf::erfc(mu / 2.0)) <= 1e-8);
    }
}

}
