#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svt {

// Base class for every error raised by this library. The CLI maps these to
// diagnostics and exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& what_arg = "input contains no values")
        : Error(what_arg) {}
};

// A value failed validation; `index` is the zero-based position in the input.
class BadValueError : public Error {
public:
    BadValueError(const std::string& what_arg, std::size_t index)
        : Error(what_arg), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NonFiniteValueError : public BadValueError {
public:
    explicit NonFiniteValueError(std::size_t index)
        : BadValueError("non-finite value at index " + std::to_string(index), index) {}
};

class NegativeValueError : public BadValueError {
public:
    explicit NegativeValueError(std::size_t index)
        : BadValueError("negative value at index " + std::to_string(index) +
                            " (pass allow_negative to accept)",
                        index) {}
};

class InsufficientSampleError : public Error {
public:
    using Error::Error;
};

class NonPositivePowerError : public Error {
public:
    explicit NonPositivePowerError(double power)
        : Error("stop-loss power must be > 0, got " + std::to_string(power)) {}
};

// Zero lies outside the convex hull of the pseudo-values; the constrained
// likelihood maximization is infeasible. jel_test reports this as a boundary
// rejection instead of letting the exception escape.
class HullViolationError : public Error {
public:
    HullViolationError() : Error("zero is not interior to the pseudo-value range") {}
};

class DegenerateDataError : public Error {
public:
    using Error::Error;
};

class DegenerateVarianceError : public Error {
public:
    DegenerateVarianceError()
        : Error("plug-in variance is zero, the normal test is undefined") {}
};

class OutOfRangeError : public Error {
public:
    using Error::Error;
};

class NegativeStatisticError : public Error {
public:
    using Error::Error;
};

class InvalidParametersError : public Error {
public:
    using Error::Error;
};

// File or config parsing failure; `line` is one-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what_arg, std::size_t line)
        : Error(what_arg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace svt
