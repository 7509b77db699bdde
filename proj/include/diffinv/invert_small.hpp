#pragma once

namespace diffinv::invert_small {

/// Terms of the small-a expansion in P = ln(2/(c√π)).
struct PExpansionTerms {
    double P = 0.0;
    int order = 3;  // bracket terms kept: 1, 2 or 3
};

/// a ≈ 1/(4 erfc⁻¹(c/2)²), from I(a) ≈ 2 erfc(1/(2√a)).
double invert_erfc(double c);

/// a ≈ 1/(2 W(8/(πc²))) when use_w is set, otherwise the explicit
/// 1/(2 ln[(8/(πc²)) / ln(8/(πc²))]).
double invert_lambert(double c, bool use_w = false);

PExpansionTerms p_expansion_terms(double c, int order = 3);

/// a ≈ (1/4P)(1 + lnP/(2P) + (ln²P - lnP + 2)/(4P²)). Throws DomainError
/// when P ≤ 1 (c ≳ 0.415).
double invert_p_expansion(double c);

/// Same expansion truncated to `terms.order` bracket terms.
double evaluate_p_expansion(const PExpansionTerms& terms);

/// 1/(4w) with w = P - ½lnP + (lnP - 2)/(4P), the intermediate expansion the
/// three-term bracket is derived from.
double invert_p_intermediate(double c);

}  // namespace diffinv::invert_small
