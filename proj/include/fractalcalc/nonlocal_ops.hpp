#pragma once

#include "fractalcalc/cantor.hpp"
#include "fractalcalc/profile.hpp"

namespace fcalc {

// Order bookkeeping for the non-local operators.  `beta` is the order
// exposed to callers; every operator acts as the classical fractional
// operator of order beta on the profile in the u = S_F(x) coordinate.
// That calibration is the one under which the power rules, the constant
// rule and the transform table all hold with the printed exponents.
//
// When beta is (numerically) a positive integer multiple of alpha, the
// operators degenerate to repeated local derivatives/integrals; in
// particular beta == alpha reduces every non-local operator to the local
// one.  The reduction is an exact route, not a limit of the generic
// kernel: the operator family is deliberately discontinuous there.
struct OrderPair {
    double alpha;
    double beta;

    // smallest n with n*alpha >= beta (derivative order count in
    // fractal units; kept for the admissibility window)
    int unit_count() const;
    // classical order count in the u coordinate, ceil(beta)
    int conjugate_count() const;
    // k >= 1 if beta == k*alpha to 1e-12, else 0
    int local_multiple() const;

    void validate() const;
};

// How rl_derivative realizes D^beta = (d/du)^n I^{n-beta}.
enum class RLMethod {
    // Integrate by parts first:
    //   D^b g(U) = sum_k g^(k)(0) U^{k-b}/Gamma(k-b+1)
    //            + (1/Gamma(n-b)) Int_0^U (U-u)^{n-b-1} g^(n)(u) du.
    // One quadrature, no differentiation of a quadrature; preferred for
    // C^n profiles.  Falls back to difference_of_integral when the
    // profile declares an origin singularity (g(0) does not exist).
    auto_select,
    // Literal finite difference (in u) of the (n - beta)-order integral;
    // kept as an independent route for cross-checks.  Noise floor is
    // about quad_tol / fd_step, i.e. ~1e-7 absolute.
    difference_of_integral,
};

// Riemann-Liouville integral of order ord.beta of the profile,
// evaluated at u = S(x):  (1/Gamma(b)) Int_0^{S(x)} (S(x)-u)^{b-1} g(u) du.
double rl_integral(const CantorSet& set, const Profile& p, const OrderPair& ord,
                   double x, double abs_tol = 1e-9);

// Same, with the upper limit given directly in the u coordinate.
double rl_integral_u(const Profile& p, double beta, double upper,
                     double abs_tol = 1e-9);

// Riemann-Liouville derivative of order ord.beta at u = S(x).
double rl_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                     double x, RLMethod method = RLMethod::auto_select);

double rl_derivative_u(const Profile& p, double beta, double upper,
                       RLMethod method = RLMethod::auto_select);

// Caputo derivative of order ord.beta at u = S(x):
//   (1/Gamma(n-b)) Int_0^{S(x)} (S(x)-u)^{n-b-1} g^(n)(u) du,  n = ceil(b).
// Annihilates constants exactly (the difference stencil of a constant is
// identically zero).
double caputo_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                         double x, double abs_tol = 1e-9);

// Truncated Gruenwald sum for the order-beta derivative at u = S(x):
//   (S/n)^{-b} sum_{k=0}^{n-1} w_k g(S - k S/n),
// with w_0 = 1, w_k = w_{k-1} (k-1-b)/k.  First-order accurate in 1/n.
// Non-negative integer beta (with alpha < 1) is rejected: Gamma(-beta)
// degenerates and the sum no longer represents the operator.
double grunwald_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                           double x, int n_terms);

struct ScalePair {
    double lhs;
    double rhs;
};

// Both sides of the non-local scale identity
//   D^beta[f(S(lambda x))](x) = lambda^{beta alpha} (D^beta f)(lambda x)
// computed independently.  lambda must be 1 or 3^-m (the staircase scale
// law only holds on that sequence).
ScalePair scale_check(const CantorSet& set, const Profile& p, const OrderPair& ord,
                      double lambda, double x);

} // namespace fcalc
