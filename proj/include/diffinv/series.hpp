#pragma once

namespace diffinv::series {

/// Stop when the next term falls below term_tol; fail after max_terms.
struct SeriesTruncation {
    double term_tol = 1e-16;
    int max_terms = 10000;

    void validate() const;
};

/// I(a) = 1 - Σ_{n≥0} (-1)ⁿ 4/((2n+1)π) exp(-(2n+1)²π²a/4).
///
/// Residue expansion over the poles k_n = π/2 + nπ. Converges fast for
/// moderate and large a; throws ToleranceError if max_terms is reached.
double I_fourier(double a, const SeriesTruncation& tr = {});

/// I(a) = 2 Σ_{m≥0} (-1)^m erfc((2m+1)/(2√a)).
///
/// Accurate to full relative precision as a → 0⁺. The cutoff is relative to
/// the running sum, so the leading term is always kept.
double I_erfc_sum(double a, const SeriesTruncation& tr = {});

/// Exact I(a) from whichever series is cheaper: erfc sum below a = 0.05,
/// Fourier series above.
double I_exact(double a, const SeriesTruncation& tr = {});

/// Residue-series value of b_n(c), 0 ≤ n ≤ 4.
///
/// b_0 = I_fourier(a*). For n ≥ 1 the integrand is odd with simple poles at
/// ±k_m where Res 1/cos = (-1)^{m+1}, giving
///   b_n = (2/n!) Σ_m (-1)^{m+1} k_m^{2n-1} e^{-a* k_m²}.
double eval_bn_residue(int n, double c, const SeriesTruncation& tr = {});

}  // namespace diffinv::series
