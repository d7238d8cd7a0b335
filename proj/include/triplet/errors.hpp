#pragma once

#include <stdexcept>
#include <string>

// Named error conditions thrown across the library. Each failure mode gets
// its own type so callers and tests can catch precisely.

namespace triplet {

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : std::runtime_error(what) {}
};

struct ZeroAtNegativeExponent : std::runtime_error {
  explicit ZeroAtNegativeExponent(
      const std::string& what = "zero substituted at negative exponent")
      : std::runtime_error(what) {}
};

struct ModulusMismatch : std::runtime_error {
  explicit ModulusMismatch(const std::string& what = "modulus mismatch")
      : std::runtime_error(what) {}
};

struct NotSquare : std::runtime_error {
  explicit NotSquare(const std::string& what = "matrix is not square")
      : std::runtime_error(what) {}
};

struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& what = "matrix is not invertible")
      : std::runtime_error(what) {}
};

struct PositionOutOfRange : std::runtime_error {
  explicit PositionOutOfRange(const std::string& what = "position out of range")
      : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what = "cap exceeded")
      : std::runtime_error(what) {}
};

struct UnsupportedN : std::runtime_error {
  explicit UnsupportedN(const std::string& what = "unsupported rank n")
      : std::runtime_error(what) {}
};

struct IndexOrder : std::runtime_error {
  explicit IndexOrder(const std::string& what = "indices out of order")
      : std::runtime_error(what) {}
};

struct UnassignedGenerator : std::runtime_error {
  explicit UnassignedGenerator(const std::string& what = "generator has no image")
      : std::runtime_error(what) {}
};

struct NotInvertibleImage : std::runtime_error {
  explicit NotInvertibleImage(
      const std::string& what = "image matrix admits no direct inverse")
      : std::runtime_error(what) {}
};

struct UnsupportedPresentation : std::runtime_error {
  explicit UnsupportedPresentation(
      const std::string& what = "operation not defined for this presentation")
      : std::runtime_error(what) {}
};

struct ZeroParameter : std::runtime_error {
  explicit ZeroParameter(const std::string& what = "parameter must be nonzero")
      : std::runtime_error(what) {}
};

struct DomainViolation : std::runtime_error {
  explicit DomainViolation(const std::string& what = "parameter outside its domain")
      : std::runtime_error(what) {}
};

struct NotTwoLocal : std::runtime_error {
  explicit NotTwoLocal(const std::string& what = "representation is not 2-local")
      : std::runtime_error(what) {}
};

struct NonMonomialImage : std::runtime_error {
  explicit NonMonomialImage(
      const std::string& what = "automorphism image is not a scaled generator")
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace triplet
