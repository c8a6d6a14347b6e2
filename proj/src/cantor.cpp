#include "fractalcalc/cantor.hpp"
#include "fractalcalc/errors.hpp"

#include <cfloat>
#include <cmath>
#include <cstdint>

namespace fcalc {

namespace {

using u128 = unsigned __int128;

// Fixed-point scale for exact ternary digit extraction.  125 fractional
// bits leave two bits of headroom so that num * 3 never overflows u128.
constexpr int kScaleBits = 125;
const u128 kScaleMask = (u128(1) << kScaleBits) - 1;

// x in (0,1) as an exact 125-bit fixed-point numerator.  Exact whenever
// x >= 2^-72; smaller x lose trailing bits, which only perturbs ternary
// digits past position ~45 (contribution < 2^-45 to the result).
u128 to_fixed(double x) {
    int e = 0;
    double f = std::frexp(x, &e); // x = f * 2^e, f in [0.5, 1)
    auto m = static_cast<std::uint64_t>(std::ldexp(f, 53));
    int shift = kScaleBits - 53 + e;
    if (shift >= 0) return u128(m) << shift;
    if (-shift >= 64) return 0;
    return u128(m >> -shift);
}

// Cantor function on [0,1] by exact digit mapping.
double cantor_unit(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    u128 num = to_fixed(x);
    double value = 0.0;
    double bit = 0.5;
    for (int i = 0; i < 64 && num != 0; ++i) {
        num *= 3;
        auto digit = static_cast<unsigned>(num >> kScaleBits);
        num &= kScaleMask;
        if (digit == 1) {
            value += bit; // first 1: plateau value, expansion stops
            break;
        }
        if (digit == 2) value += bit;
        bit *= 0.5;
    }
    return value;
}

bool in_cantor_unit(double x, int depth) {
    if (x <= 0.0 || x >= 1.0) return x == 0.0 || x == 1.0;
    u128 num = to_fixed(x);
    for (int i = 0; i < depth && num != 0; ++i) {
        num *= 3;
        auto digit = static_cast<unsigned>(num >> kScaleBits);
        num &= kScaleMask;
        // A terminating expansion (num == 0 after a digit 1) is the left
        // endpoint of a gap; its digit-2 form has no 1s, so it survives.
        if (digit == 1) return num == 0;
    }
    return true;
}

} // namespace

CantorSet::CantorSet(int depth, double alpha, double length)
    : depth_(depth), alpha_(alpha), length_(length), identity_(alpha == 1.0) {
    if (depth < 1) throw DomainError("CantorSet: depth must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("CantorSet: alpha must lie in (0,1]");
    if (!(length > 0.0)) throw DomainError("CantorSet: domain length must be positive");
}

double CantorSet::staircase(double x) const {
    if (x < 0.0 || x > length_)
        throw DomainError("staircase: x outside [0, length]");
    if (identity_) return x;
    double t = (length_ == 1.0) ? x : x / length_;
    double unit = cantor_unit(t);
    return (length_ == 1.0) ? unit : std::pow(length_, alpha_) * unit;
}

double CantorSet::staircase_inverse(double s) const {
    double s_max = (length_ == 1.0) ? 1.0 : std::pow(length_, alpha_);
    if (s < 0.0 || s > s_max)
        throw DomainError("staircase_inverse: s outside [0, length^alpha]");
    if (identity_) return s;
    double t = (length_ == 1.0) ? s : s / s_max;
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return length_;

    // Binary digits of t (every double is dyadic, so this terminates).
    int bits[1100];
    int n = 0;
    double r = t;
    while (r > 0.0 && n < 1100) {
        r *= 2.0;
        int b = (r >= 1.0) ? 1 : 0;
        r -= b;
        bits[n++] = b;
    }
    // Map bit 1 -> ternary digit 2 except the lowest set bit, which maps
    // to digit 1: that picks the LEFT endpoint of the plateau.
    // Horner from the last digit; long double keeps the rounding small.
    long double acc = 0.0L;
    for (int i = n - 1; i >= 0; --i) {
        int digit = (i == n - 1) ? 1 : 2 * bits[i];
        acc = (acc + digit) / 3.0L;
    }
    double x = static_cast<double>(acc);
    // Nudge onto/into the plateau so the roundtrip is exact when the
    // plateau is representable.
    for (int k = 0; k < 8 && cantor_unit(x) < t; ++k) x = std::nextafter(x, 1.0);
    for (int k = 0; k < 8 && cantor_unit(x) > t; ++k) x = std::nextafter(x, 0.0);
    return (length_ == 1.0) ? x : x * length_;
}

bool CantorSet::contains(double x) const {
    if (x < 0.0 || x > length_)
        throw DomainError("contains: x outside [0, length]");
    if (identity_) return true;
    double t = (length_ == 1.0) ? x : x / length_;
    return in_cantor_unit(t, depth_);
}

CantorPoint CantorSet::evaluate(double x) const {
    return CantorPoint{x, staircase(x), contains(x)};
}

} // namespace fcalc
