#include "fractalcalc/local_ops.hpp"
#include "fractalcalc/errors.hpp"
#include "fractalcalc/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fcalc {

namespace {

double checked_eval(const Profile& p, double u) {
    const double v = p(u);
    if (!std::isfinite(v))
        throw EvalError("profile '" + p.description + "' is non-finite near u = " +
                        std::to_string(u));
    return v;
}

double first_derivative_step(const Profile& p, double u, double h) {
    if (u >= 2.0 * h && u <= 1.0 - 2.0 * h)
        return (checked_eval(p, u + h) - checked_eval(p, u - h)) / (2.0 * h);
    if (u < 2.0 * h) // forward, second order
        return (-3.0 * checked_eval(p, u) + 4.0 * checked_eval(p, u + h) -
                checked_eval(p, u + 2.0 * h)) / (2.0 * h);
    return (3.0 * checked_eval(p, u) - 4.0 * checked_eval(p, u - h) +
            checked_eval(p, u - 2.0 * h)) / (2.0 * h);
}

double second_derivative_step(const Profile& p, double u, double h) {
    if (u >= h && u <= 1.0 - h)
        return (checked_eval(p, u + h) - 2.0 * checked_eval(p, u) +
                checked_eval(p, u - h)) / (h * h);
    if (u < h)
        return (checked_eval(p, u) - 2.0 * checked_eval(p, u + h) +
                checked_eval(p, u + 2.0 * h)) / (h * h);
    return (checked_eval(p, u) - 2.0 * checked_eval(p, u - h) +
            checked_eval(p, u - 2.0 * h)) / (h * h);
}

} // namespace

double conjugate_derivative(const Profile& p, double u, int n) {
    if (n == 1) {
        const double h = 1e-6;
        const double d1 = first_derivative_step(p, u, h);
        const double d2 = first_derivative_step(p, u, 0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    }
    if (n == 2) {
        const double h = 1e-4;
        const double d1 = second_derivative_step(p, u, h);
        const double d2 = second_derivative_step(p, u, 0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    }
    throw DomainError("conjugate_derivative: order must be 1 or 2");
}

double falpha_derivative(const CantorSet& set, const Profile& p, double x) {
    if (x < 0.0 || x > set.length())
        throw DomainError("falpha_derivative: x outside the domain");
    if (!set.contains(x)) return 0.0;
    return conjugate_derivative(p, set.staircase(x), 1);
}

double falpha_integral(const CantorSet& set, const Profile& p, double a, double b,
                       double abs_tol) {
    if (a > b) throw DomainError("falpha_integral: requires a <= b");
    const double sa = set.staircase(a);
    const double sb = set.staircase(b);
    if (sa == sb) return 0.0; // [a,b] inside one gap: zero staircase measure
    QuadOptions opts;
    opts.abs_tol = abs_tol;
    opts.left_power = (sa == 0.0) ? p.origin_power : 0.0;
    return integrate([&p](double u) { return p(u); }, sa, sb, opts);
}

GridSeries sample_series(const CantorSet& set, const Profile& p, int n) {
    if (n < 2) throw DomainError("sample_series: n must be >= 2");
    GridSeries out({"x", "s", "value", "in_set"});
    const double L = set.length();
    for (int i = 0; i < n; ++i) {
        const double x = L * static_cast<double>(i) / (n - 1);
        const CantorPoint pt = set.evaluate(x);
        out.append_row({pt.x, pt.s, p(pt.s), pt.in_set ? 1.0 : 0.0});
    }
    out.set_meta("alpha", set.alpha());
    out.set_meta("profile", p.description);
    return out;
}

} // namespace fcalc
