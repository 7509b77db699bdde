#include "diffinv/series.hpp"

#include <cmath>
#include <string>

#include "diffinv/common.hpp"
#include "diffinv/specfn.hpp"

namespace diffinv::series {

namespace {

constexpr double kErfcSumCrossover = 0.05;

[[noreturn]] void truncation_failure(const char* what, double a, int max_terms) {
    throw ToleranceError(std::string(what) + ": no convergence within " + std::to_string(max_terms) +
                         " terms at a=" + std::to_string(a));
}

}  // namespace

void SeriesTruncation::validate() const {
    if (!(term_tol > 0.0)) throw DomainError("SeriesTruncation.term_tol must be positive");
    if (max_terms < 1) throw DomainError("SeriesTruncation.max_terms must be at least 1");
}

double I_fourier(double a, const SeriesTruncation& tr) {
    tr.validate();
    require_positive(a, "a");
    const double q = kPi * kPi * a / 4.0;
    double sum = 0.0;
    for (int n = 0; n < tr.max_terms; ++n) {
        const double m = 2.0 * n + 1.0;
        const double term = 4.0 / (m * kPi) * std::exp(-m * m * q);
        if (term < tr.term_tol) {
            return 1.0 - sum;
        }
        sum += (n % 2 == 0) ? term : -term;
    }
    truncation_failure("I_fourier", a, tr.max_terms);
}

double I_erfc_sum(double a, const SeriesTruncation& tr) {
    tr.validate();
    require_positive(a, "a");
    const double scale = 1.0 / (2.0 * std::sqrt(a));
    double sum = 2.0 * specfn::erfc(scale);
    for (int m = 1; m < tr.max_terms; ++m) {
        const double term = 2.0 * specfn::erfc((2.0 * m + 1.0) * scale);
        if (term == 0.0 || term < tr.term_tol * std::abs(sum)) {
            return sum;
        }
        sum += (m % 2 == 0) ? term : -term;
    }
    truncation_failure("I_erfc_sum", a, tr.max_terms);
}

double I_exact(double a, const SeriesTruncation& tr) {
    return a < kErfcSumCrossover ? I_erfc_sum(a, tr) : I_fourier(a, tr);
}

double eval_bn_residue(int n, double c, const SeriesTruncation& tr) {
    tr.validate();
    if (n < 0 || n > 4) throw DomainError("eval_bn_residue supports 0 <= n <= 4");
    const double as = a_star(c);
    if (n == 0) {
        return I_fourier(as, tr);
    }
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;

    double sum = 0.0;
    for (int m = 0; m < tr.max_terms; ++m) {
        const double k = (m + 0.5) * kPi;
        const double term = std::pow(k, 2 * n - 1) * std::exp(-as * k * k);
        if (m > 0 && term < tr.term_tol * std::max(1.0, std::abs(sum))) {
            return 2.0 / fact * sum;
        }
        sum += (m % 2 == 0) ? -term : term;
    }
    truncation_failure("eval_bn_residue", as, tr.max_terms);
}

}  // namespace diffinv::series
