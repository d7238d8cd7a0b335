#pragma once

#include <string>

#include "triplet/laurent.hpp"

// Field of fractions of the Laurent ring. Deliberately no polynomial GCD
// normalization: equality is decided by cross-multiplication. The only
// reductions applied are cheap unit ones (fold single-term denominators,
// rescale so the denominator's leading coefficient is 1), which keep the
// representatives small without ever computing a GCD.

namespace triplet {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
      : num_(num), den_(den) {
    normalize();
  }

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(LaurentPoly::variable(name));
  }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(int e) const {
    if (e < 0) return (RationalFunction(Rational(1)) / *this).pow(-e);
    RationalFunction acc{Rational(1)};
    RationalFunction base = *this;
    unsigned k = static_cast<unsigned>(e);
    while (k > 0) {
      if (k & 1U) acc *= base;
      base *= base;
      k >>= 1U;
    }
    return acc;
  }

  // Cross-multiplication equality: a/b == c/d iff ad == cb.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
  }

 private:
  LaurentPoly num_, den_;

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(Rational(1));
      return;
    }
    if (den_.is_single_term()) {
      num_ *= den_.term_inverse();
      den_ = LaurentPoly(Rational(1));
      return;
    }
    // Scale so the denominator's leading (graded-lex greatest) coefficient is 1.
    Rational lead = den_.terms().rbegin()->second;
    if (!lead.is_one()) {
      LaurentPoly inv{Rational(1) / lead};
      num_ *= inv;
      den_ *= inv;
    }
  }
};

}  // namespace triplet
