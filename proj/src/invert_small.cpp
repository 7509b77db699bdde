#include "diffinv/invert_small.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "diffinv/common.hpp"
#include "diffinv/specfn.hpp"

namespace diffinv::invert_small {

double invert_erfc(double c) {
    require_unit_interval(c);
    const double x = specfn::erfc_inv(0.5 * c);
    return 1.0 / (4.0 * x * x);
}

double invert_lambert(double c, bool use_w) {
    require_unit_interval(c);
    const double z = 8.0 / (kPi * c * c);
    if (use_w) {
        return 1.0 / (2.0 * specfn::lambert_w0(z));
    }
    const double inner = std::log(z);
    if (!(z > 1.0) || !(z / inner > 1.0)) {
        throw DomainError("log-log scheme: inner argument must exceed 1 at c=" + std::to_string(c));
    }
    return 1.0 / (2.0 * std::log(z / inner));
}

PExpansionTerms p_expansion_terms(double c, int order) {
    require_unit_interval(c);
    if (order < 1 || order > 3) throw DomainError("P-expansion order must be 1, 2 or 3");
    const double P = std::log(2.0 * std::numbers::inv_sqrtpi / c);
    if (!(P > 1.0)) {
        throw DomainError("P-expansion requires P > 1 (c < 2/(e√π)), got P=" + std::to_string(P));
    }
    return {P, order};
}

double evaluate_p_expansion(const PExpansionTerms& t) {
    if (t.order < 1 || t.order > 3) throw DomainError("P-expansion order must be 1, 2 or 3");
    if (!(t.P > 1.0)) throw DomainError("P-expansion requires P > 1");
    const double P = t.P;
    const double lp = std::log(P);
    double bracket = 1.0;
    if (t.order >= 2) bracket += lp / (2.0 * P);
    if (t.order >= 3) bracket += (lp * lp - lp + 2.0) / (4.0 * P * P);
    return bracket / (4.0 * P);
}

double invert_p_expansion(double c) {
    return evaluate_p_expansion(p_expansion_terms(c, 3));
}

double invert_p_intermediate(double c) {
    const double P = p_expansion_terms(c).P;
    const double lp = std::log(P);
    const double w = P - 0.5 * lp + (lp - 2.0) / (4.0 * P);
    return 1.0 / (4.0 * w);
}

}  // namespace diffinv::invert_small
