#pragma once

#include <cmath>

namespace fcalc {

// Dimension of the middle-third Cantor set, ln 2 / ln 3.
inline constexpr double kCantorDimension = 0.63092975357145743710;

struct CantorPoint {
    double x = 0.0;      // abscissa in [0, length]
    double s = 0.0;      // staircase value in [0, length^alpha]
    bool in_set = false; // membership at the configured depth
};

// The middle-third Cantor set on [0, length] together with its staircase
// function.  `alpha` is the order used by every operator built on top of
// the set; the staircase values themselves are those of the classical
// Cantor function and do not depend on alpha.  Setting alpha == 1 selects
// the degenerate identity staircase (the support becomes the whole
// interval), which reduces the entire calculus to its classical
// counterpart and is used for sanity checks.
//
// The paper-style dimension 0.6309 (or 0.6) may be configured; the scale
// identities S(x/3) = S(x)/2 hold for the staircase itself regardless,
// but composite laws quoted as lambda^alpha are exact only for
// alpha = ln2/ln3.
class CantorSet {
public:
    CantorSet() = default;
    CantorSet(int depth, double alpha, double length = 1.0);

    int depth() const { return depth_; }
    double alpha() const { return alpha_; }
    double length() const { return length_; }
    bool identity() const { return identity_; }

    // S_F(x), exact to unit roundoff for machine-representable x.  The
    // value is obtained from the ternary expansion of x/length: digits
    // 0 -> bit 0, 2 -> bit 1, read as a binary fraction; the first digit
    // equal to 1 contributes bit 1 and terminates (64 digits extracted).
    double staircase(double x) const;

    // Left endpoint of the preimage interval {x : S_F(x) = s}.  Exact
    // roundtrip staircase(staircase_inverse(s)) == s whenever the
    // plateau at s is wider than double spacing (dyadic s with roughly
    // <= 33 significant bits); otherwise the roundtrip is limited by the
    // Hoelder regularity of the staircase, about 1e-10.
    double staircase_inverse(double s) const;

    // True iff x survives `depth` middle-third removals.  Terminating
    // ternary expansions prefer the digit-2 form, so interval endpoints
    // such as 1/3 are members.
    bool contains(double x) const;

    CantorPoint evaluate(double x) const;

private:
    int depth_ = 40;
    double alpha_ = kCantorDimension;
    double length_ = 1.0;
    bool identity_ = false;
};

} // namespace fcalc
