#pragma once

#include <cstdint>
#include <string>

#include "triplet/errors.hpp"

// Arithmetic in F_p for a small prime modulus p > 3 chosen at runtime.
// p > 3 guarantees 2, 3 and 4 are invertible, which the classification
// censuses rely on.

namespace triplet {

class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint32_t value, std::uint32_t p) : p_(checked(p)) {
    v_ = value % p_;
  }
  PrimeFieldElement(long long value, std::uint32_t p) : p_(checked(p)) {
    long long r = value % static_cast<long long>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  PrimeFieldElement operator-() const {
    return PrimeFieldElement(v_ == 0 ? 0U : p_ - v_, p_);
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a,
                                     const PrimeFieldElement& b) {
    a.match(b);
    return PrimeFieldElement((a.v_ + b.v_) % a.p_, a.p_);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a,
                                     const PrimeFieldElement& b) {
    a.match(b);
    return PrimeFieldElement((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a,
                                     const PrimeFieldElement& b) {
    a.match(b);
    std::uint64_t prod = static_cast<std::uint64_t>(a.v_) * b.v_;
    return PrimeFieldElement(static_cast<std::uint32_t>(prod % a.p_), a.p_);
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a,
                                     const PrimeFieldElement& b) {
    a.match(b);
    return a * b.inverse();
  }

  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this = *this / o; }

  PrimeFieldElement inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_p");
    return pow(static_cast<long long>(p_) - 2);
  }

  PrimeFieldElement pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    std::uint64_t acc = 1, base = v_;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k > 0) {
      if (k & 1ULL) acc = acc * base % p_;
      base = base * base % p_;
      k >>= 1ULL;
    }
    return PrimeFieldElement(static_cast<std::uint32_t>(acc), p_);
  }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    a.match(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return !(a == b);
  }
  friend bool operator<(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    a.match(b);
    return a.v_ < b.v_;
  }

  std::string to_string() const { return std::to_string(v_); }

  static std::uint32_t checked(std::uint32_t p) {
    if (p <= 3) throw DomainViolation("modulus must be a prime > 3");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw DomainViolation("modulus must be prime");
    return p;
  }

 private:
  std::uint32_t v_;
  std::uint32_t p_;

  void match(const PrimeFieldElement& o) const {
    if (p_ != o.p_) throw ModulusMismatch();
  }
};

}  // namespace triplet
