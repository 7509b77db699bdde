#include "diffinv/schemes.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "diffinv/composite.hpp"
#include "diffinv/invert_large.hpp"
#include "diffinv/invert_small.hpp"
#include "diffinv/oracle.hpp"

namespace diffinv {

namespace {

constexpr std::array<std::pair<SchemeId, std::string_view>, 14> kNames = {{
    {SchemeId::FirstOrder, "first-order"},
    {SchemeId::Fourier1, "fourier-1"},
    {SchemeId::Fourier2, "fourier-2"},
    {SchemeId::Fourier3, "fourier-3"},
    {SchemeId::Quadratic, "quadratic"},
    {SchemeId::Quartic, "quartic"},
    {SchemeId::InverseErfc, "erfc"},
    {SchemeId::LogLog, "loglog"},
    {SchemeId::LambertW, "lambert-w"},
    {SchemeId::PExpansion, "p-expansion"},
    {SchemeId::PerfectMatch, "perfect-match"},
    {SchemeId::Explicit1, "explicit-1"},
    {SchemeId::Explicit2, "explicit-2"},
    {SchemeId::Oracle, "oracle"},
}};

}  // namespace

SchemeId parse_scheme(std::string_view name) {
    std::string norm(name);
    std::replace(norm.begin(), norm.end(), '_', '-');
    for (const auto& [id, n] : kNames) {
        if (n == norm) return id;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(SchemeId id) {
    for (const auto& [i, n] : kNames) {
        if (i == id) return n;
    }
    return "unknown";
}

const std::vector<SchemeId>& all_schemes() {
    static const std::vector<SchemeId> ids = [] {
        std::vector<SchemeId> v;
        for (const auto& [id, n] : kNames) v.push_back(id);
        return v;
    }();
    return ids;
}

double estimate_a(double c, SchemeId id, const contour::QuadratureSpec& q) {
    using composite::CompositeScheme;
    switch (id) {
        case SchemeId::FirstOrder: return invert_large::invert_first_order(c);
        case SchemeId::Fourier1: return invert_large::invert_fourier_N(c, 1);
        case SchemeId::Fourier2: return invert_large::invert_fourier_N(c, 2);
        case SchemeId::Fourier3: return invert_large::invert_fourier_N(c, 3);
        case SchemeId::Quadratic: return invert_large::invert_epsilon_poly(c, 2, q);
        case SchemeId::Quartic: return invert_large::invert_epsilon_poly(c, 4, q);
        case SchemeId::InverseErfc: return invert_small::invert_erfc(c);
        case SchemeId::LogLog: return invert_small::invert_lambert(c, false);
        case SchemeId::LambertW: return invert_small::invert_lambert(c, true);
        case SchemeId::PExpansion: return invert_small::invert_p_expansion(c);
        case SchemeId::PerfectMatch: return composite::composite_invert(c, CompositeScheme::perfect_match(), q);
        case SchemeId::Explicit1: return composite::composite_invert(c, CompositeScheme::explicit_1(), q);
        case SchemeId::Explicit2: return composite::composite_invert(c, CompositeScheme::explicit_2(), q);
        case SchemeId::Oracle: return oracle::true_a(c);
    }
    throw std::invalid_argument("unhandled scheme");
}

}  // namespace diffinv
