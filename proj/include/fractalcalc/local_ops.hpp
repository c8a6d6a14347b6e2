#pragma once

#include "fractalcalc/cantor.hpp"
#include "fractalcalc/grid_series.hpp"
#include "fractalcalc/profile.hpp"

namespace fcalc {

// d^n/du^n of the profile at u, by central differences with one
// Richardson level (one-sided near the ends of [0,1] so g is never
// sampled far outside its contract domain).  n = 1 or 2.
double conjugate_derivative(const Profile& p, double u, int n = 1);

// Local derivative: g'(S_F(x)) when x is in the set at the configured
// depth, 0 otherwise (the off-support branch of the definition).
double falpha_derivative(const CantorSet& set, const Profile& p, double x);

// Integral against the staircase measure over [a, b], i.e. the ordinary
// integral of g over [S(a), S(b)].
double falpha_integral(const CantorSet& set, const Profile& p, double a, double b,
                       double abs_tol = 1e-10);

// n uniformly spaced x in [0, length]; columns x, s, value (the
// conjugate value g(S(x)) everywhere) and in_set.  Gaps are not zeroed:
// membership is a separate column so plots can mask it as they wish.
GridSeries sample_series(const CantorSet& set, const Profile& p, int n);

} // namespace fcalc
