#pragma once

#include <functional>

namespace fcalc {

struct QuadOptions {
    double abs_tol = 1e-10;
    int max_depth = 40;      // interval bisection depth cap
    int max_panels = 40000;  // refinement budget
    // Known algebraic endpoint behaviour of the integrand:
    // f(u) ~ (u-a)^left_power near a, f(u) ~ (b-u)^right_power near b.
    // Powers in (-1, 0) are removed analytically by the substitution
    // u = a + t^{1/(1+p)} (resp. mirrored) before adaptive refinement.
    // Powers <= -1 are rejected as non-integrable.
    double left_power = 0.0;
    double right_power = 0.0;
};

// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b] to an
// absolute tolerance.  Throws ConvergenceError (carrying the estimate
// and the achieved error bound) if the budget is exhausted first, and
// EvalError for non-finite integrand values or non-integrable declared
// endpoint powers.  Endpoints are never evaluated (all Kronrod nodes are
// interior).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {});

} // namespace fcalc
