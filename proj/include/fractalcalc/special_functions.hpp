#pragma once

namespace fcalc {

// Gamma function, Lanczos approximation (g = 7, 9 terms) with reflection
// for negative arguments.  Relative error below 1e-13 on (0, 170].
// Throws DomainError at the poles z = 0, -1, -2, ...
double gamma_f(double z);

// 1/Gamma(z); returns 0 at the poles (the standard entire extension).
double rgamma(double z);

// binomial(n + k, k) for small non-negative integer n, by the
// multiplicative recurrence (no Gamma evaluations, no overflow for the
// series lengths used here).
double binomial_nk(int n, int k);

struct MLParams {
    double eta;            // series parameter, > 0
    double nu = 1.0;       // second parameter, any real
    double tol = 1e-12;    // term-based stopping tolerance
    int k_max = 300;       // hard cap on summed terms
};

struct MLDiagnostics {
    int terms = 0; // index after the last summed term
};

// Two-parameter Mittag-Leffler function  E_{eta,nu}(z) = sum_k z^k /
// Gamma(eta k + nu)  by direct summation, stopping when
// |term| < tol * (1 + |partial sum|).  Pole terms contribute 0 via
// rgamma.  Shipped domain |z| <= 50; within it, parameter combinations
// whose terms have not started decaying by k_max raise ConvergenceError
// carrying the partial sum (small eta with large |z| needs an asymptotic
// branch this library does not provide).
double mittag_leffler(const MLParams& params, double z,
                      MLDiagnostics* diag = nullptr);

} // namespace fcalc
