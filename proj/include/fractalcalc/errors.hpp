#pragma once

#include <stdexcept>
#include <string>

namespace fcalc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside the operation's admissible range.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A series or quadrature failed to reach the requested tolerance.
// Carries the best estimate obtained and the error actually achieved.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double estimate, double achieved)
        : Error(what), estimate(estimate), achieved(achieved) {}
    double estimate;
    double achieved;
};

// A function evaluation produced a non-finite value or hit a declared
// singular point.
class EvalError : public Error {
public:
    explicit EvalError(const std::string& what) : Error(what) {}
};

// A time stepper could not advance (e.g. singular update denominator).
class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(what) {}
};

// Mismatched grid/table shapes.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

} // namespace fcalc
