#pragma once

#include <stdexcept>
#include <string>

namespace detlab {

/// Base class for everything detlab throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Determinant requested for a non-square matrix.
class NotSquareError : public Error {
public:
    NotSquareError(std::size_t rows, std::size_t cols)
        : Error("matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

/// Operand shapes do not line up for the requested operation.
class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Cofactor expansion is an oracle for small matrices only.
class TooLargeForCofactorError : public Error {
public:
    explicit TooLargeForCofactorError(std::size_t rows)
        : Error("cofactor determinant capped at 10x10, got " + std::to_string(rows) + "x" +
                std::to_string(rows)) {}
};

/// A fraction-free elimination step produced a nonzero remainder.
/// This is an implementation bug, never a property of the input.
class InexactDivisionError : public Error {
public:
    explicit InexactDivisionError(const std::string& what) : Error(what) {}
};

/// The embedded prime table cannot cover the requested reconstruction range.
class PrimePoolExhaustedError : public Error {
public:
    explicit PrimePoolExhaustedError(std::size_t required_bits)
        : Error("prime pool exhausted: reconstruction needs " + std::to_string(required_bits) +
                " bits of prime product"),
          required_bits_(required_bits) {}
    std::size_t required_bits() const { return required_bits_; }

private:
    std::size_t required_bits_;
};

/// lo > hi, or the span does not fit in 64 bits.
class InvalidRangeError : public Error {
public:
    explicit InvalidRangeError(const std::string& what) : Error(what) {}
};

/// Polynomial degree outside what the measure supports.
class DegreeOutOfRangeError : public Error {
public:
    explicit DegreeOutOfRangeError(const std::string& what) : Error(what) {}
};

/// Node index outside the measure's support.
class NodeIndexOutOfRangeError : public Error {
public:
    explicit NodeIndexOutOfRangeError(const std::string& what) : Error(what) {}
};

/// Malformed text input; the message carries the offending span.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Two determinant algorithms disagreed where agreement is guaranteed.
class InternalDisagreementError : public Error {
public:
    explicit InternalDisagreementError(const std::string& what) : Error(what) {}
};

/// Invalid argument to a constructor or operation (invariant violation).
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

}  // namespace detlab
