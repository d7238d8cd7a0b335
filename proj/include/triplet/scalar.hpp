#pragma once

#include <concepts>
#include <string>

#include "triplet/laurent.hpp"
#include "triplet/primefield.hpp"
#include "triplet/ratfun.hpp"
#include "triplet/rational.hpp"

// Glue between the four scalar domains and the generic linear algebra:
// prototype-based zero/one construction (the prime field carries a runtime
// modulus), a field tag for pivoting strategy, and unit inversion.

namespace triplet {

template <typename T>
concept ScalarRing = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a* b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <typename T>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};
template <>
struct is_field<RationalFunction> : std::true_type {};
template <>
struct is_field<PrimeFieldElement> : std::true_type {};

template <typename T>
inline constexpr bool is_field_v = is_field<T>::value;

template <typename T>
concept FieldScalar = ScalarRing<T> && is_field_v<T>;

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline LaurentPoly zero_like(const LaurentPoly&) { return LaurentPoly(); }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(Rational(1)); }
inline RationalFunction zero_like(const RationalFunction&) {
  return RationalFunction(Rational(0));
}
inline RationalFunction one_like(const RationalFunction&) {
  return RationalFunction(Rational(1));
}
inline PrimeFieldElement zero_like(const PrimeFieldElement& s) {
  return PrimeFieldElement(0U, s.modulus());
}
inline PrimeFieldElement one_like(const PrimeFieldElement& s) {
  return PrimeFieldElement(1U, s.modulus());
}

inline Rational scalar_from_int(long long v, const Rational&) { return Rational(v); }
inline LaurentPoly scalar_from_int(long long v, const LaurentPoly&) {
  return LaurentPoly(Rational(v));
}
inline RationalFunction scalar_from_int(long long v, const RationalFunction&) {
  return RationalFunction(Rational(v));
}
inline PrimeFieldElement scalar_from_int(long long v, const PrimeFieldElement& s) {
  return PrimeFieldElement(v, s.modulus());
}

// Multiplicative inverse of a unit. Over the Laurent ring only single-term
// elements are units; over the three fields any nonzero element qualifies.
inline Rational scalar_inverse(const Rational& a) {
  if (a.is_zero()) throw NotInvertible("zero rational");
  return Rational(1) / a;
}
inline LaurentPoly scalar_inverse(const LaurentPoly& a) { return a.term_inverse(); }
inline RationalFunction scalar_inverse(const RationalFunction& a) {
  if (a.is_zero()) throw NotInvertible("zero rational function");
  return RationalFunction(Rational(1)) / a;
}
inline PrimeFieldElement scalar_inverse(const PrimeFieldElement& a) {
  if (a.is_zero()) throw NotInvertible("zero in F_p");
  return a.inverse();
}

// Exact quotient in each domain; over the Laurent ring the division must be
// exact (used by fraction-free elimination, which guarantees it).
inline Rational scalar_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline LaurentPoly scalar_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  return a.exact_divide(b);
}
inline RationalFunction scalar_exact_div(const RationalFunction& a,
                                         const RationalFunction& b) {
  return a / b;
}
inline PrimeFieldElement scalar_exact_div(const PrimeFieldElement& a,
                                          const PrimeFieldElement& b) {
  return a / b;
}

}  // namespace triplet
