#include "fractalcalc/nonlocal_ops.hpp"
#include "fractalcalc/errors.hpp"
#include "fractalcalc/local_ops.hpp"
#include "fractalcalc/quadrature.hpp"
#include "fractalcalc/special_functions.hpp"

#include <cmath>
#include <string>

namespace fcalc {

namespace {

constexpr double kMultipleTol = 1e-12;

double require_upper(double upper) {
    if (!(upper > 0.0))
        throw DomainError("non-local operator: S(x) must be positive (x > 0)");
    return upper;
}

// True when g ~ C u^p with fractional p > 0: the derivatives of such a
// profile blow up (or vanish non-smoothly) at the origin, so difference
// steps must scale with u and the differentiated integrand carries the
// power p - n.
bool fractional_origin(const Profile& p) {
    return p.origin_power > 0.0 &&
           std::fabs(p.origin_power - std::round(p.origin_power)) > kMultipleTol;
}

double derivative_origin_power(const Profile& p, int n) {
    if (p.origin_power < 0.0) return p.origin_power - n;
    if (fractional_origin(p)) return p.origin_power - n;
    return 0.0;
}

// n-th derivative of the profile for use inside kernel quadratures.
// Absolute step for profiles analytic at the origin, u-scaled step for
// fractional-power profiles (keeps the stencil on the correct side of 0
// and the relative truncation error ~1e-12 uniformly in u).
double integrand_derivative(const Profile& p, double u, int n) {
    if (!fractional_origin(p) && p.origin_power >= 0.0)
        return conjugate_derivative(p, u, n);
    const double h = (n == 1 ? 1e-6 : 1e-4) * std::max(u, 1e-6);
    if (n == 1) {
        if (u <= 2.0 * h)
            return (-3.0 * p(u) + 4.0 * p(u + h) - p(u + 2.0 * h)) / (2.0 * h);
        auto d = [&](double s) { return (p(u + s) - p(u - s)) / (2.0 * s); };
        return (4.0 * d(0.5 * h) - d(h)) / 3.0;
    }
    if (u <= h) return (p(u) - 2.0 * p(u + h) + p(u + 2.0 * h)) / (h * h);
    auto d = [&](double s) { return (p(u + s) - 2.0 * p(u) + p(u - s)) / (s * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

// k-fold conjugate derivative (the local reduction route).
double repeated_local_derivative(const Profile& p, double u, int k) {
    if (k == 1) return conjugate_derivative(p, u, 1);
    if (k == 2) return conjugate_derivative(p, u, 2);
    throw DomainError("non-local operator: local reduction beyond order 2 unsupported");
}

// k-fold integral from 0, Cauchy form: Int_0^U (U-u)^{k-1}/(k-1)! g(u) du.
double repeated_local_integral(const Profile& p, double upper, int k, double abs_tol) {
    QuadOptions opts;
    opts.abs_tol = abs_tol;
    opts.left_power = p.origin_power;
    const double fact = (k == 1) ? 1.0 : gamma_f(static_cast<double>(k));
    return integrate(
               [&p, upper, k](double u) {
                   double w = 1.0;
                   for (int i = 1; i < k; ++i) w *= (upper - u);
                   return w * p(u);
               },
               0.0, upper, opts) /
           fact;
}

} // namespace

int OrderPair::unit_count() const {
    return static_cast<int>(std::ceil(beta / alpha - kMultipleTol));
}

int OrderPair::conjugate_count() const {
    return static_cast<int>(std::ceil(beta - kMultipleTol));
}

int OrderPair::local_multiple() const {
    const double ratio = beta / alpha;
    const double k = std::round(ratio);
    if (k >= 1.0 && std::fabs(ratio - k) < kMultipleTol) return static_cast<int>(k);
    return 0;
}

void OrderPair::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("OrderPair: alpha must lie in (0,1]");
    if (!(beta > 0.0)) throw DomainError("OrderPair: beta must be positive");
    if (beta >= 2.0) throw DomainError("OrderPair: orders >= 2 are out of scope");
}

double rl_integral_u(const Profile& p, double beta, double upper, double abs_tol) {
    require_upper(upper);
    QuadOptions opts;
    opts.abs_tol = abs_tol;
    opts.left_power = p.origin_power;
    opts.right_power = beta - 1.0;
    const double raw = integrate(
        [&p, beta, upper](double u) { return p(u) * std::pow(upper - u, beta - 1.0); },
        0.0, upper, opts);
    return raw * rgamma(beta);
}

double rl_integral(const CantorSet& set, const Profile& p, const OrderPair& ord,
                   double x, double abs_tol) {
    ord.validate();
    const double upper = require_upper(set.staircase(x));
    if (int k = ord.local_multiple(); k > 0)
        return repeated_local_integral(p, upper, k, abs_tol);
    return rl_integral_u(p, ord.beta, upper, abs_tol);
}

double rl_derivative_u(const Profile& p, double beta, double upper, RLMethod method) {
    require_upper(upper);
    const int n = static_cast<int>(std::ceil(beta - kMultipleTol));
    const double b = beta;
    const double dpow = derivative_origin_power(p, n);

    if (method == RLMethod::auto_select && p.origin_power >= 0.0 && dpow > -1.0) {
        // Integrated-by-parts form: boundary powers plus one quadrature
        // of the kernel against g^(n).
        double boundary = p(0.0) * std::pow(upper, -b) * rgamma(1.0 - b);
        if (n == 2)
            boundary += integrand_derivative(p, 0.0, 1) * std::pow(upper, 1.0 - b) *
                        rgamma(2.0 - b);
        QuadOptions opts;
        opts.abs_tol = 1e-12;
        opts.left_power = dpow;
        opts.right_power = static_cast<double>(n) - b - 1.0;
        const double integral = integrate(
            [&p, n, b, upper](double u) {
                return integrand_derivative(p, u, n) * std::pow(upper - u, n - b - 1.0);
            },
            0.0, upper, opts);
        return boundary + integral * rgamma(static_cast<double>(n) - b);
    }

    // Finite difference of the (n - beta)-order integral.
    auto V = [&p, n, b](double w) {
        return rl_integral_u(p, static_cast<double>(n) - b, w, 1e-13);
    };
    if (n == 1) {
        const double h = 1e-6;
        auto d = [&](double step) {
            if (upper > 4.0 * step)
                return (V(upper + step) - V(upper - step)) / (2.0 * step);
            return (-3.0 * V(upper) + 4.0 * V(upper + step) - V(upper + 2.0 * step)) /
                   (2.0 * step);
        };
        return (4.0 * d(0.5 * h) - d(h)) / 3.0;
    }
    const double h = 1e-3;
    auto d2nd = [&](double step) {
        return (V(upper + step) - 2.0 * V(upper) + V(upper - step)) / (step * step);
    };
    return (4.0 * d2nd(0.5 * h) - d2nd(h)) / 3.0;
}

double rl_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                     double x, RLMethod method) {
    ord.validate();
    const double upper = require_upper(set.staircase(x));
    if (int k = ord.local_multiple(); k > 0) return repeated_local_derivative(p, upper, k);
    if (std::fabs(ord.beta - std::round(ord.beta)) < kMultipleTol)
        return repeated_local_derivative(p, upper, static_cast<int>(std::round(ord.beta)));
    return rl_derivative_u(p, ord.beta, upper, method);
}

double caputo_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                         double x, double abs_tol) {
    ord.validate();
    const double upper = require_upper(set.staircase(x));
    if (int k = ord.local_multiple(); k > 0) return repeated_local_derivative(p, upper, k);

    const int n = ord.conjugate_count();
    const double b = ord.beta;
    const double dpow = derivative_origin_power(p, n);
    if (p.origin_power < 0.0 || dpow <= -1.0)
        throw EvalError("caputo_derivative: profile '" + p.description +
                        "' has a non-integrable differentiated integrand at u = 0");
    QuadOptions opts;
    opts.abs_tol = abs_tol;
    opts.left_power = dpow;
    opts.right_power = static_cast<double>(n) - b - 1.0;
    const double integral = integrate(
        [&p, n, b, upper](double u) {
            return integrand_derivative(p, u, n) * std::pow(upper - u, n - b - 1.0);
        },
        0.0, upper, opts);
    return integral * rgamma(static_cast<double>(n) - b);
}

double grunwald_derivative(const CantorSet& set, const Profile& p, const OrderPair& ord,
                           double x, int n_terms) {
    ord.validate();
    if (n_terms < 2) throw DomainError("grunwald_derivative: n_terms must be >= 2");
    const double upper = require_upper(set.staircase(x));
    if (int k = ord.local_multiple(); k > 0) return repeated_local_derivative(p, upper, k);
    const double b = ord.beta;
    if (b == std::floor(b))
        throw DomainError("grunwald_derivative: integer beta degenerates Gamma(-beta)");

    const double h = upper / n_terms;
    double w = 1.0;
    double sum = p(upper); // k = 0 term
    for (int k = 1; k < n_terms; ++k) {
        w *= (k - 1.0 - b) / k;
        sum += w * p(upper - k * h);
    }
    return std::pow(h, -b) * sum;
}

ScalePair scale_check(const CantorSet& set, const Profile& p, const OrderPair& ord,
                      double lambda, double x) {
    ord.validate();
    if (lambda != 1.0) {
        // must be 3^-m for some integer m >= 1
        const double m = std::round(-std::log(lambda) / std::log(3.0));
        if (!(m >= 1.0) || std::fabs(lambda * std::pow(3.0, m) - 1.0) > 1e-9)
            throw DomainError("scale_check: lambda must be 1 or 3^-m");
    }
    const double c = std::pow(lambda, set.alpha());
    Profile scaled = Profile::from_function(
        [&p, c](double u) { return p(c * u); }, p.description + "(scaled)",
        p.origin_power);
    const double lhs = rl_derivative(set, scaled, ord, x);
    const double rhs =
        std::pow(lambda, ord.beta * set.alpha()) * rl_derivative(set, p, ord, lambda * x);
    return ScalePair{lhs, rhs};
}

} // namespace fcalc
