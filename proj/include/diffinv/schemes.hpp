#pragma once

#include <string_view>
#include <vector>

#include "diffinv/contour.hpp"

namespace diffinv {

/// Every way the library can turn c into a.
enum class SchemeId {
    FirstOrder,
    Fourier1,
    Fourier2,
    Fourier3,
    Quadratic,
    Quartic,
    InverseErfc,
    LogLog,
    LambertW,
    PExpansion,
    PerfectMatch,
    Explicit1,
    Explicit2,
    Oracle,
};

/// Accepts the canonical names below; '_' and '-' are interchangeable.
/// Throws std::invalid_argument for an unknown name.
SchemeId parse_scheme(std::string_view name);

/// Canonical name: first-order, fourier-1..3, quadratic, quartic, erfc,
/// loglog, lambert-w, p-expansion, perfect-match, explicit-1, explicit-2, oracle.
std::string_view scheme_name(SchemeId id);

const std::vector<SchemeId>& all_schemes();

/// a for datum c under the given scheme.
double estimate_a(double c, SchemeId id, const contour::QuadratureSpec& q = {});

}  // namespace diffinv
