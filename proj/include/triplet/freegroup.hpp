#pragma once

#include <map>
#include <string>
#include <vector>

#include "triplet/laurent.hpp"
#include "triplet/matrix.hpp"

// Free group words scaled by Laurent units, automorphisms sending generators
// to scaled generators, Fox derivatives over the group ring, and the Jacobian
// matrix extraction that turns such an automorphism into an exact matrix.

namespace triplet {

// Freely reduced word in x_1..x_n; letters are (generator index, exponent).
class FreeWord {
 public:
  using Letter = std::pair<int, int>;

  FreeWord() = default;
  explicit FreeWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) push(l);
  }

  static FreeWord generator(int i, int exp = 1) {
    if (i < 1) throw PositionOutOfRange("generator index");
    if (exp != 1 && exp != -1) throw DomainViolation("exponent must be +-1");
    return FreeWord({{i, exp}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.push({it->first, -it->second});
    return w;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord w = a;
    for (const Letter& l : b.letters_) w.push(l);
    return w;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
  friend bool operator<(const FreeWord& a, const FreeWord& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const Letter& l : letters_) {
      if (!out.empty()) out += " ";
      out += "x" + std::to_string(l.first);
      if (l.second == -1) out += "^-1";
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;

  void push(const Letter& l) {
    if (!letters_.empty() && letters_.back().first == l.first &&
        letters_.back().second == -l.second) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
};

// unit * word, where unit is a single Laurent monomial with coefficient +-1.
struct ScaledWord {
  LaurentPoly unit;
  FreeWord word;

  ScaledWord() : unit(Rational(1)) {}
  ScaledWord(const LaurentPoly& u, const FreeWord& w) : unit(u), word(w) {
    if (!u.is_single_term()) throw DomainViolation("unit must be a single monomial");
    Rational c = u.terms().begin()->second;
    if (c != Rational(1) && c != Rational(-1))
      throw DomainViolation("unit coefficient must be +-1");
  }

  friend bool operator==(const ScaledWord& a, const ScaledWord& b) {
    return a.unit == b.unit && a.word == b.word;
  }
  friend bool operator!=(const ScaledWord& a, const ScaledWord& b) { return !(a == b); }

  friend ScaledWord operator*(const ScaledWord& a, const ScaledWord& b) {
    return ScaledWord(a.unit * b.unit, a.word * b.word);
  }

  std::string to_string() const {
    if (unit.is_one()) return word.to_string();
    return unit.to_string() + " " + word.to_string();
  }
};

// Element of the group ring: finite sum of reduced words with Laurent
// coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement of(const FreeWord& w, const LaurentPoly& c) {
    GroupRingElement g;
    if (!c.is_zero()) g.terms_[w] = c;
    return g;
  }

  const std::map<FreeWord, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& add(const FreeWord& w, const LaurentPoly& c) {
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
    return *this;
  }

  friend GroupRingElement operator+(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }

  friend GroupRingElement operator-(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }

  // Left multiplication by a scaled word.
  friend GroupRingElement operator*(const ScaledWord& u, const GroupRingElement& g) {
    GroupRingElement r;
    for (const auto& [w, c] : g.terms_) r.add(u.word * w, u.unit * c);
    return r;
  }

  friend GroupRingElement operator*(const LaurentPoly& c, const GroupRingElement& g) {
    GroupRingElement r;
    for (const auto& [w, k] : g.terms_) r.add(w, c * k);
    return r;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
    return !(a == b);
  }

  // Projection sending every free generator to 1 and fixing the Laurent
  // variables: the sum of all coefficients.
  LaurentPoly project_generators_to_one() const {
    LaurentPoly total;
    for (const auto& [w, c] : terms_) total += c;
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + w.to_string();
    }
    return out;
  }

 private:
  std::map<FreeWord, LaurentPoly> terms_;
};

// Automorphism of F_n sending each generator to unit * generator, with the
// index map a permutation and every unit a monomial with coefficient 1.
class MonomialAutomorphism {
 public:
  explicit MonomialAutomorphism(const std::vector<ScaledWord>& images)
      : images_(images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (const ScaledWord& im : images_) {
      if (im.word.length() != 1 || im.word.letters()[0].second != 1)
        throw NonMonomialImage();
      if (im.unit.terms().begin()->second != Rational(1))
        throw NonMonomialImage("unit coefficient must be 1");
      int g = im.word.letters()[0].first;
      if (g < 1 || g > n || hit[static_cast<std::size_t>(g - 1)])
        throw NonMonomialImage("index map must permute 1..n");
      hit[static_cast<std::size_t>(g - 1)] = true;
    }
  }

  static MonomialAutomorphism identity(int n) {
    std::vector<ScaledWord> im;
    for (int i = 1; i <= n; ++i)
      im.emplace_back(LaurentPoly(Rational(1)), FreeWord::generator(i));
    return MonomialAutomorphism(im);
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const ScaledWord& image(int i) const {
    if (i < 1 || i > rank()) throw PositionOutOfRange("generator index");
    return images_[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
    return !(a == b);
  }

 private:
  std::vector<ScaledWord> images_;
};

// Applies the automorphism letterwise; units commute with everything, so they
// accumulate multiplicatively while the letters map through the index
// permutation. Inverse letters invert both the unit and the letter.
inline ScaledWord aut_apply(const MonomialAutomorphism& a, const ScaledWord& w) {
  LaurentPoly unit = w.unit;
  FreeWord word;
  for (const auto& [i, exp] : w.word.letters()) {
    if (i < 1 || i > a.rank()) throw PositionOutOfRange("generator index");
    const ScaledWord& im = a.image(i);
    unit *= exp == 1 ? im.unit : im.unit.term_inverse();
    word = word * FreeWord::generator(im.word.letters()[0].first, exp);
  }
  return {unit, word};
}

// (a o b)(x) = a(b(x)).
inline MonomialAutomorphism aut_compose(const MonomialAutomorphism& a,
                                        const MonomialAutomorphism& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("automorphism ranks differ");
  std::vector<ScaledWord> im;
  for (int i = 1; i <= b.rank(); ++i) im.push_back(aut_apply(a, b.image(i)));
  return MonomialAutomorphism(im);
}

// Fox derivative with respect to x_j, extended Laurent-linearly to scaled
// words. On letters: D_j(x_i) = delta_ij, D_j(x_i^-1) = -delta_ij x_i^-1,
// and D_j(u v) = D_j(u) + u D_j(v) with augmentation 1 on group elements.
inline GroupRingElement fox_derivative(const ScaledWord& w, int j) {
  if (j < 1) throw PositionOutOfRange("derivative index");
  GroupRingElement acc;
  FreeWord prefix;
  for (const auto& [i, exp] : w.word.letters()) {
    if (i == j) {
      if (exp == 1) {
        acc.add(prefix, LaurentPoly(Rational(1)));
      } else {
        acc.add(prefix * FreeWord::generator(i, -1), LaurentPoly(Rational(-1)));
      }
    }
    prefix = prefix * FreeWord::generator(i, exp);
  }
  return w.unit * acc;
}

// Jacobian matrix of a monomial automorphism: entry (r, c) is the
// generators-to-one projection of D_c applied to the image of x_r. For
// monomial automorphisms every entry is a Laurent monomial or zero.
inline Matrix<LaurentPoly> magnus_jacobian(const MonomialAutomorphism& a) {
  const int n = a.rank();
  Matrix<LaurentPoly> m = Matrix<LaurentPoly>::zero(n, n, LaurentPoly());
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      m.at(r - 1, c - 1) =
          fox_derivative(a.image(r), c).project_generators_to_one();
  return m;
}

}  // namespace triplet
