#include "fractalcalc/special_functions.hpp"
#include "fractalcalc/errors.hpp"

#include <cmath>
#include <string>

namespace fcalc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, n = 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double z) {
    return z <= 0.0 && z == std::floor(z);
}

double lanczos_positive(double z) {
    // valid for z >= 0.5
    double x = kLanczos[0];
    const double zm1 = z - 1.0;
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm1 + i);
    const double t = zm1 + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * x;
}

} // namespace

double gamma_f(double z) {
    if (is_nonpositive_integer(z))
        throw DomainError("gamma_f: pole at z = " + std::to_string(z));
    if (z < 0.5)
        return kPi / (std::sin(kPi * z) * lanczos_positive(1.0 - z));
    return lanczos_positive(z);
}

double rgamma(double z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z < 0.5) return std::sin(kPi * z) * lanczos_positive(1.0 - z) / kPi;
    double g = lanczos_positive(z);
    if (std::isinf(g)) return 0.0;
    return 1.0 / g;
}

double binomial_nk(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c *= static_cast<double>(n + i) / i;
    return c;
}

double mittag_leffler(const MLParams& params, double z, MLDiagnostics* diag) {
    if (!(params.eta > 0.0))
        throw DomainError("mittag_leffler: eta must be positive");
    if (std::fabs(z) > 50.0)
        throw DomainError("mittag_leffler: |z| > 50 outside the shipped domain");

    double sum = 0.0;
    double zpow = 1.0;
    double last_term = 0.0;
    for (int k = 0; k < params.k_max; ++k) {
        const double term = zpow * rgamma(params.eta * k + params.nu);
        sum += term;
        last_term = std::fabs(term);
        if (k > 0 && last_term < params.tol * (1.0 + std::fabs(sum))) {
            if (diag) diag->terms = k + 1;
            return sum;
        }
        zpow *= z;
        if (std::fabs(zpow) > 1e290)
            throw ConvergenceError("mittag_leffler: series terms overflow", sum, last_term);
    }
    throw ConvergenceError("mittag_leffler: no convergence within k_max", sum, last_term);
}

} // namespace fcalc
