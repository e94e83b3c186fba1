#pragma once

#include <stdexcept>
#include <string>

namespace ivtrnn {

// Base class for all library errors. Subclasses distinguish the failure
// kinds that callers (and the CLI exit-code mapping) care about.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Trapezoid abscissae violate a <= b <= c <= d.
class OutOfOrderError : public Error {
public:
    explicit OutOfOrderError(const std::string& what) : Error(what) {}
};

// A component lies outside the unit interval.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

// Triangular membership with a = m or m = c.
class DegenerateSupportError : public Error {
public:
    explicit DegenerateSupportError(const std::string& what) : Error(what) {}
};

// Scalar multiple / power requires lambda > 0.
class NonPositiveLambdaError : public Error {
public:
    explicit NonPositiveLambdaError(const std::string& what) : Error(what) {}
};

// Pointwise set operations require identical ordered universes.
class UniverseMismatchError : public Error {
public:
    explicit UniverseMismatchError(const std::string& what) : Error(what) {}
};

// Triangular-form score/accuracy called on a non-triangular number.
class NotTriangularError : public Error {
public:
    explicit NotTriangularError(const std::string& what) : Error(what) {}
};

// Aggregation input lengths disagree.
class LengthMismatchError : public Error {
public:
    explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

// Weight vector violates its declared normalization mode.
class InvalidWeightsError : public Error {
public:
    explicit InvalidWeightsError(const std::string& what) : Error(what) {}
};

// A matrix cell references a term missing from the linguistic scale.
class UnknownTermError : public Error {
public:
    explicit UnknownTermError(const std::string& what) : Error(what) {}
};

// Input document is not syntactically/structurally readable.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Input document is readable but semantically invalid.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

} // namespace ivtrnn
