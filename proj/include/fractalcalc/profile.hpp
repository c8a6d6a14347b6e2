#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace fcalc {

// A function on the fractal support, represented by its staircase-
// coordinate profile g: f(x) = g(S_F(x)).  Every operator in the library
// acts on g in the u = S_F(x) coordinate, where it is a classical
// operator; nothing is ever differentiated against the raw x coordinate.
//
// `origin_power` declares the leading behaviour g(u) ~ C * u^origin_power
// as u -> 0+.  A negative value flags an integrable singularity at the
// origin (e.g. u^{mu-1} with mu < 1); quadratures use it to substitute
// away the singular endpoint.  Values <= -1 are not integrable and are
// rejected by the operators that integrate across the origin.
struct Profile {
    std::function<double(double)> g;
    std::string description;
    double origin_power = 0.0;

    double operator()(double u) const { return g(u); }

    static Profile constant(double c) {
        return {[c](double) { return c; }, "const", 0.0};
    }
    // g(u) = u^exponent
    static Profile power(double exponent) {
        return {[exponent](double u) { return std::pow(u, exponent); },
                "power", exponent};
    }
    // g(u) = scale * exp(rate * u)
    static Profile exponential(double rate, double scale = 1.0) {
        return {[rate, scale](double u) { return scale * std::exp(rate * u); },
                "exp", 0.0};
    }
    static Profile identity() {
        return {[](double u) { return u; }, "identity", 0.0};
    }
    static Profile from_function(std::function<double(double)> fn,
                                 std::string description = "user",
                                 double origin_power = 0.0) {
        return {std::move(fn), std::move(description), origin_power};
    }
};

} // namespace fcalc
