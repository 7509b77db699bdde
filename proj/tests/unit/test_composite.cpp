#include <doctest.h>

#include <cmath>

#include "diffinv/composite.hpp"
#include "diffinv/errors.hpp"
#include "diffinv/invert_large.hpp"
#include "diffinv/invert_small.hpp"
#include "diffinv/oracle.hpp"
#include "diffinv/schemes.hpp"
#include "diffinv/series.hpp"

using namespace diffinv;
using namespace diffinv::composite;

namespace {

double max_re(const CompositeScheme& s, double lo, double hi, double step) {
    double m = 0.0;
    for (double c = lo; c <= hi + 1e-12; c += step) {
        m = std::max(m, relative_error(c, composite_invert(c, s)).re_percent);
    }
    return m;
}

}  // namespace

TEST_SUITE("composite") {

TEST_CASE("factories") {
    const auto pm = CompositeScheme::perfect_match();
    CHECK(pm.id == CompositeId::PerfectMatch);
    CHECK(pm.advertised_re_bound == 0.0005);
    CHECK(CompositeScheme::explicit_1().advertised_re_bound == 1.2);
    CHECK(CompositeScheme::explicit_2().advertised_re_bound == 3.1);
    CHECK(CompositeScheme::explicit_1().fourier_terms == 3);
}

TEST_CASE("Table 4 first row") {
    CHECK(composite_invert(0.017699, CompositeScheme::perfect_match()) == doctest::Approx(0.0729612).epsilon(2e-6));
    CHECK(composite_invert(0.017699, CompositeScheme::explicit_2()) == doctest::Approx(0.0734684).epsilon(5e-6));
}

TEST_CASE("large c uses the large-a branch in every scheme") {
    const double c = 0.840652;
    CHECK(composite_invert(c, CompositeScheme::perfect_match()) == invert_large::invert_epsilon_poly(c, 2));
    CHECK(composite_invert(c, CompositeScheme::explicit_1()) == invert_large::invert_fourier_terms(c, 3));
    CHECK(composite_invert(c, CompositeScheme::explicit_2()) == invert_large::invert_first_order(c));
    const double a_pm = composite_invert(c, CompositeScheme::perfect_match());
    for (const auto& s : {CompositeScheme::explicit_1(), CompositeScheme::explicit_2()}) {
        CHECK(composite_invert(c, s) * 25.0 == doctest::Approx(a_pm * 25.0).epsilon(1e-5));
    }
}

TEST_CASE("breakpoint is inclusive on the lower branch") {
    for (const auto& s :
         {CompositeScheme::perfect_match(), CompositeScheme::explicit_1(), CompositeScheme::explicit_2()}) {
        CHECK(composite_invert(s.breakpoint, s) == lower_branch(s.breakpoint, s));
        const double above = std::nextafter(s.breakpoint, 1.0);
        CHECK(composite_invert(above, s) == upper_branch(above, s));
    }
}

TEST_CASE("breakpoints sit where the branch errors cross") {
    for (const auto& s :
         {CompositeScheme::perfect_match(), CompositeScheme::explicit_1(), CompositeScheme::explicit_2()}) {
        const double c = s.breakpoint;
        const double lo = relative_error(c, lower_branch(c, s)).re_percent;
        const double hi = relative_error(c, upper_branch(c, s)).re_percent;
        CHECK(std::abs(lo - hi) < 1e-3 * s.advertised_re_bound);
        CHECK(std::abs(lo - hi) < s.advertised_re_bound);
        // just left the lower branch is better, just right the upper one
        const double l = c - 1e-3, r = c + 1e-3;
        CHECK(relative_error(l, lower_branch(l, s)).re_percent < relative_error(l, upper_branch(l, s)).re_percent);
        CHECK(relative_error(r, upper_branch(r, s)).re_percent < relative_error(r, lower_branch(r, s)).re_percent);
    }
}

TEST_CASE("rounded breakpoint 0.18 would break the perfect-match ceiling") {
    // documents why the crossing value is used: the quadratic branch alone at
    // c = 0.181 exceeds the advertised 0.0005 %
    auto s = CompositeScheme::perfect_match();
    s.breakpoint = 0.18;
    CHECK(relative_error(0.181, composite_invert(0.181, s)).re_percent > s.advertised_re_bound);
}

TEST_CASE("RE ceilings on the 0.005 grid") {
    CHECK(max_re(CompositeScheme::perfect_match(), 0.005, 0.995, 0.005) < 0.0005);
    CHECK(max_re(CompositeScheme::explicit_1(), 0.005, 0.995, 0.005) < 1.2);
    CHECK(max_re(CompositeScheme::explicit_1(), 0.075, 0.995, 0.005) < 0.3);
    CHECK(max_re(CompositeScheme::explicit_2(), 0.005, 0.995, 0.005) < 3.1);
}

TEST_CASE("composites are strictly increasing") {
    for (const auto& s :
         {CompositeScheme::perfect_match(), CompositeScheme::explicit_1(), CompositeScheme::explicit_2()}) {
        double prev = 0.0;
        for (int i = 1; i <= 999; ++i) {
            const double a = composite_invert(0.001 * i, s);
            CHECK(a > prev);
            prev = a;
        }
    }
}

TEST_CASE("relative error") {
    const auto r = relative_error(0.1, invert_large::invert_first_order(0.1));
    CHECK(r.re_percent == doctest::Approx(18.7).epsilon(0.3 / 18.7));
    CHECK(r.ok());
    CHECK(r.c_reconstructed == series::I_exact(r.a_estimate));
    const double a = 0.37;
    CHECK(relative_error(series::I_exact(a), a).re_percent == 0.0);
    const auto ll = relative_error(0.258, invert_small::invert_lambert(0.258));
    CHECK(ll.c_reconstructed == doctest::Approx(0.2505).epsilon(1e-3));
    CHECK_THROWS_AS(relative_error(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(relative_error(0.5, 0.0), DomainError);
}

TEST_CASE("invalid scheme settings") {
    auto s = CompositeScheme::explicit_1();
    s.breakpoint = 1.5;
    CHECK_THROWS_AS(composite_invert(0.5, s), DomainError);
    s = CompositeScheme::explicit_1();
    s.fourier_terms = 7;
    CHECK_THROWS_AS(composite_invert(0.5, s), DomainError);
    CHECK_THROWS_AS(composite_invert(1.0, CompositeScheme::perfect_match()), DomainError);
}

TEST_CASE("scheme registry") {
    CHECK(parse_scheme("perfect-match") == SchemeId::PerfectMatch);
    CHECK(parse_scheme("perfect_match") == SchemeId::PerfectMatch);
    CHECK(parse_scheme("first_order") == SchemeId::FirstOrder);
    CHECK(parse_scheme("fourier-3") == SchemeId::Fourier3);
    CHECK(parse_scheme("oracle") == SchemeId::Oracle);
    CHECK_THROWS_AS(parse_scheme("Perfect-Match"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scheme(""), std::invalid_argument);
    for (const auto id : all_schemes()) {
        CHECK(parse_scheme(scheme_name(id)) == id);
        CHECK(std::isfinite(estimate_a(0.3, id)));
    }
    CHECK(all_schemes().size() == 14);
    CHECK(estimate_a(0.3, SchemeId::Explicit1) == composite_invert(0.3, CompositeScheme::explicit_1()));
    CHECK(estimate_a(0.3, SchemeId::Oracle) == oracle::true_a(0.3));
}

}
