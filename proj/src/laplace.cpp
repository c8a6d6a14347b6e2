#include "fractalcalc/laplace.hpp"
#include "fractalcalc/errors.hpp"
#include "fractalcalc/quadrature.hpp"
#include "fractalcalc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fcalc {

namespace {

double binomial_series(const BinomialPower& e, double u) {
    const double d = e.zeta - e.mu;
    double sum = 0.0;
    double apow = 1.0; // (-a)^k
    for (int k = 0; k < 500; ++k) {
        const double term =
            binomial_nk(e.n, k) * apow * std::pow(u, k * d) *
            rgamma(k * d + (e.n + 1) * e.zeta);
        sum += term;
        if (k > 2 && std::fabs(term) < 1e-15 * (1.0 + std::fabs(sum)))
            return std::pow(u, e.zeta * (e.n + 1) - 1.0) * sum;
        apow *= -e.a;
        if (std::fabs(apow) > 1e280)
            throw ConvergenceError("invert: series terms overflow", sum, term);
    }
    throw ConvergenceError("invert: series did not converge", sum, 0.0);
}

double trinomial_series(const PowerOverTrinomial& e, double u) {
    const double d = e.zeta - e.mu;
    double sum = 0.0;
    double bpow = 1.0; // (-b)^n
    for (int n = 0; n < 400; ++n) {
        double inner = 0.0;
        double apow = 1.0; // (-a)^k
        double last = 0.0;
        for (int k = 0; k < 400; ++k) {
            const double term = binomial_nk(n, k) * apow * std::pow(u, k * d + n * e.zeta) *
                                rgamma(k * d + (n + 1) * e.zeta - e.xi);
            inner += term;
            last = std::fabs(term);
            if (k > 2 && last < 1e-15 * (1.0 + std::fabs(inner))) break;
            apow *= -e.a;
        }
        const double outer = bpow * inner;
        sum += outer;
        if (n > 2 && std::fabs(outer) < 1e-15 * (1.0 + std::fabs(sum)))
            return std::pow(u, e.zeta - e.xi - 1.0) * sum;
        bpow *= -e.b;
        if (std::fabs(bpow) > 1e280)
            throw ConvergenceError("invert: series terms overflow", sum, last);
    }
    throw ConvergenceError("invert: double series did not converge", sum, 0.0);
}

void validate(const PowerOverBinomial& e) {
    if (!(e.zeta > 0.0 && e.mu > 0.0))
        throw DomainError("PowerOverBinomial: zeta, mu must be positive");
}
void validate(const BinomialPower& e) {
    if (!(e.zeta >= e.mu && e.mu > 0.0) || e.n < 0)
        throw DomainError("BinomialPower: requires zeta >= mu > 0, n >= 0");
}
void validate(const PowerOverTrinomial& e) {
    if (!(e.zeta >= e.mu && e.zeta > e.xi))
        throw DomainError("PowerOverTrinomial: requires zeta >= mu and zeta > xi");
}

} // namespace

double rational_value(const RationalSExpr& expr, double s) {
    if (!(s > 0.0)) throw DomainError("rational_value: s must be positive");
    return std::visit(
        [s](const auto& e) -> double {
            using T = std::decay_t<decltype(e)>;
            validate(e);
            if constexpr (std::is_same_v<T, PowerOverBinomial>) {
                if (!(std::pow(s, e.zeta) > std::fabs(e.a)))
                    throw DomainError("rational_value: s^zeta <= |a| outside validity");
                return std::pow(s, e.zeta - e.mu) / (std::pow(s, e.zeta) + e.a);
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                if (!(std::pow(s, e.zeta - e.mu) > std::fabs(e.a)))
                    throw DomainError("rational_value: s^{zeta-mu} <= |a| outside validity");
                return std::pow(std::pow(s, e.zeta) + e.a * std::pow(s, e.mu),
                                -(e.n + 1.0));
            } else {
                const double denom2 = std::pow(s, e.zeta) + e.a * std::pow(s, e.mu);
                if (!(std::pow(s, e.zeta - e.mu) > std::fabs(e.a) / 0.9) ||
                    !(std::fabs(denom2) > std::fabs(e.b) / 0.9))
                    throw DomainError("rational_value: geometric ratios exceed 0.9");
                return std::pow(s, e.xi) / (denom2 + e.b);
            }
        },
        expr);
}

Profile invert_profile(const RationalSExpr& expr) {
    return std::visit(
        [](const auto& e) -> Profile {
            using T = std::decay_t<decltype(e)>;
            validate(e);
            if constexpr (std::is_same_v<T, PowerOverBinomial>) {
                return Profile::from_function(
                    [e](double u) {
                        if (u == 0.0 && e.mu < 1.0) return std::pow(u, e.mu - 1.0);
                        return std::pow(u, e.mu - 1.0) *
                               mittag_leffler({e.zeta, e.mu}, -e.a * std::pow(u, e.zeta));
                    },
                    "inverse", e.mu - 1.0);
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                return Profile::from_function([e](double u) { return binomial_series(e, u); },
                                              "inverse", e.zeta * (e.n + 1) - 1.0);
            } else {
                return Profile::from_function([e](double u) { return trinomial_series(e, u); },
                                              "inverse", e.zeta - e.xi - 1.0);
            }
        },
        expr);
}

double invert(const CantorSet& set, const RationalSExpr& expr, double x) {
    if (!(x > 0.0) || x > set.length())
        throw DomainError("invert: x must lie in (0, length]");
    return invert_profile(expr)(set.staircase(x));
}

double forward_transform(const CantorSet& set, const Profile& p, double s, double tol) {
    (void)set; // the transform acts on the profile in the u coordinate
    if (!(s > 0.0)) throw DomainError("forward_transform: s must be positive");
    if (!(tol > 0.0)) throw DomainError("forward_transform: tol must be positive");

    const double panel = std::max(4.0 / s, 2.0);
    double total = 0.0;
    double lo = 0.0;
    int quiet = 0;
    for (int k = 0; k < 64; ++k) {
        const double hi = lo + panel;
        QuadOptions opts;
        opts.abs_tol = std::max(tol * 0.05, 1e-14);
        opts.left_power = (k == 0) ? p.origin_power : 0.0;
        const double part = integrate(
            [&p, s](double u) { return p(u) * std::exp(-s * u); }, lo, hi, opts);
        total += part;
        // envelope estimate at the far end of the panel
        const double tail = std::fabs(p(hi) * std::exp(-s * hi)) / s;
        if (std::fabs(part) < 0.25 * tol && tail < 0.25 * tol) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
        lo = hi;
    }
    throw DomainError("forward_transform: integrand shows no decay (s too small "
                      "for the growth of the profile)");
}

double caputo_transform(double F_of_s, double s, const OrderPair& ord,
                        std::span<const double> init) {
    ord.validate();
    if (init.empty()) throw DomainError("caputo_transform: init must have n >= 1 entries");
    double out = std::pow(s, ord.beta) * F_of_s;
    for (std::size_t k = 0; k < init.size(); ++k)
        out -= std::pow(s, ord.beta - static_cast<double>(k) - 1.0) * init[k];
    return out;
}

double roundtrip_check(const CantorSet& set, const RationalSExpr& expr,
                       std::span<const double> s_grid) {
    const Profile inv = invert_profile(expr);
    double worst = 0.0;
    for (double s : s_grid) {
        const double exact = rational_value(expr, s);
        const double got = forward_transform(set, inv, s, 1e-9);
        worst = std::max(worst, std::fabs(got - exact) / std::max(1e-300, std::fabs(exact)));
    }
    return worst;
}

} // namespace fcalc
