#pragma once

#include <stdexcept>
#include <string>

namespace maglap {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two exponential envelopes disagree where they are required to match.
class EnvelopeMismatch : public Error {
 public:
  explicit EnvelopeMismatch(const std::string& msg) : Error(msg) {}
};

// Operands live over different dimensions or variable counts.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Coordinate or multi-index position outside the valid range.
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// A scalar argument violates its documented domain (e.g. mu <= 0).
class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// The requested integral diverges for the given envelope.
class NonIntegrable : public Error {
 public:
  explicit NonIntegrable(const std::string& msg) : Error(msg) {}
};

// Confluent hypergeometric series with c a non-positive integer.
class PoleAtC : public Error {
 public:
  explicit PoleAtC(const std::string& msg) : Error(msg) {}
};

// A series failed to converge within the iteration budget.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// A matrix expected to be unitary is not, within tolerance.
class NotUnitary : public Error {
 public:
  explicit NotUnitary(const std::string& msg) : Error(msg) {}
};

// An operation that needs a nonzero function received zero.
class ZeroFunction : public Error {
 public:
  explicit ZeroFunction(const std::string& msg) : Error(msg) {}
};

// The asymptotic regime starts beyond the supplied argument.
class DomainTooSmall : public Error {
 public:
  explicit DomainTooSmall(const std::string& msg) : Error(msg) {}
};

// Malformed textual input (JSON documents, complex literals).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace maglap
