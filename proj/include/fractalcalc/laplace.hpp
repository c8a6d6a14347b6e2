#pragma once

#include "fractalcalc/cantor.hpp"
#include "fractalcalc/nonlocal_ops.hpp"
#include "fractalcalc/profile.hpp"

#include <span>
#include <variant>

namespace fcalc {

// Rational shapes in the transform variable whose inverses are known in
// closed form.  All parameters are in staircase units; the transform
// variable s is treated as a plain positive real.

// s^{zeta-mu} / (s^zeta + a); inverse u^{mu-1} E_{zeta,mu}(-a u^zeta).
// Requires zeta, mu > 0; valid for s^zeta > |a|.
struct PowerOverBinomial {
    double zeta;
    double mu;
    double a;
};

// 1 / (s^zeta + a s^mu)^{n+1}; inverse
//   u^{zeta(n+1)-1} sum_k C(n+k,k) (-a)^k u^{k(zeta-mu)}
//                         / Gamma(k(zeta-mu) + (n+1) zeta).
// Requires zeta >= mu > 0, n >= 0; valid for s^{zeta-mu} > |a|.
struct BinomialPower {
    double zeta;
    double mu;
    double a;
    int n;
};

// s^xi / (s^zeta + a s^mu + b); inverse the double series
//   u^{zeta-xi-1} sum_n sum_k (-b)^n (-a)^k C(n+k,k)
//       u^{k(zeta-mu)+n zeta} / Gamma(k(zeta-mu) + (n+1) zeta - xi).
// Requires zeta >= mu, zeta > xi; valid where both geometric ratios
// |a|/s^{zeta-mu} and |b|/(s^zeta + a s^mu) stay below 0.9.
struct PowerOverTrinomial {
    double zeta;
    double mu;
    double xi;
    double a;
    double b;
};

using RationalSExpr = std::variant<PowerOverBinomial, BinomialPower, PowerOverTrinomial>;

// The rational expression evaluated at s (throws DomainError outside the
// validity region).
double rational_value(const RationalSExpr& expr, double s);

// Closed-form inverse transform evaluated at u = S(x).
double invert(const CantorSet& set, const RationalSExpr& expr, double x);

// The inverse as a profile in u (origin_power set from the leading
// exponent so transforms of singular inverses integrate cleanly).
Profile invert_profile(const RationalSExpr& expr);

// Numerical forward transform Int_0^inf g(u) e^{-s u} du, truncated
// where the integrand envelope falls below tol.  Throws DomainError for
// s <= 0 or when the integrand shows no decay (s at or below the growth
// bound of g).
double forward_transform(const CantorSet& set, const Profile& p, double s,
                         double tol = 1e-10);

// Transform-side image of the Caputo derivative (calibrated classical
// rule): s^beta F - sum_{k<n} s^{beta-k-1} init[k], n = len(init).
double caputo_transform(double F_of_s, double s, const OrderPair& ord,
                        std::span<const double> init);

// forward_transform of the inverted expression compared against the
// rational expression on a grid of s values; returns the max relative
// error.
double roundtrip_check(const CantorSet& set, const RationalSExpr& expr,
                       std::span<const double> s_grid);

} // namespace fcalc
