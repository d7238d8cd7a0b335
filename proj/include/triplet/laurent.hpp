#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "triplet/errors.hpp"
#include "triplet/rational.hpp"

// Multivariate Laurent polynomials over Rational, with exponents in Z.
// Canonical form: variable list sorted by name and restricted to variables
// actually used; terms keyed by exponent vector in graded-lex order; no zero
// coefficients stored. Structural equality on canonical forms is semantic
// equality.

namespace triplet {

struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long long ga = std::accumulate(a.begin(), a.end(), 0LL);
    long long gb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ga != gb) return ga < gb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) terms_[{}] = c;
  }
  LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly variable(const std::string& name, int exp = 1,
                              const Rational& coeff = Rational(1)) {
    LaurentPoly p;
    if (coeff.is_zero()) return p;
    if (exp == 0) return LaurentPoly(coeff);
    p.vars_ = {name};
    p.terms_[{exp}] = coeff;
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  Rational constant_value() const {
    if (!is_constant()) throw DomainViolation("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  // Coefficient of the monomial given as {var -> exponent}; absent vars mean 0.
  Rational coefficient(const std::map<std::string, int>& mono) const {
    Exponents key(vars_.size(), 0);
    for (const auto& [name, e] : mono) {
      if (e == 0) continue;
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) return Rational(0);
      key[static_cast<std::size_t>(it - vars_.begin())] = e;
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_single_term() const { return terms_.size() == 1; }

  // Units of the Laurent ring with rational coefficients: c * monomial, c != 0.
  LaurentPoly term_inverse() const {
    if (!is_single_term()) throw NotInvertible("Laurent inverse needs a single term");
    LaurentPoly r;
    r.vars_ = vars_;
    Exponents e = terms_.begin()->first;
    for (int& x : e) x = -x;
    r.terms_[e] = Rational(1) / terms_.begin()->second;
    r.strip_unused();
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    auto [av, bv, vars] = aligned(a, b);
    LaurentPoly r;
    r.vars_ = vars;
    r.terms_ = av;
    for (const auto& [e, c] : bv) {
      auto [it, fresh] = r.terms_.emplace(e, c);
      if (!fresh) it->second += c;
    }
    r.normalize();
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    auto [av, bv, vars] = aligned(a, b);
    LaurentPoly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : av) {
      for (const auto& [eb, cb] : bv) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        auto [it, fresh] = r.terms_.emplace(e, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    }
    r.normalize();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Negative exponents require a single-term (unit) base.
  LaurentPoly pow(int e) const {
    if (e < 0) return term_inverse().pow(-e);
    LaurentPoly acc(Rational(1));
    LaurentPoly base = *this;
    unsigned k = static_cast<unsigned>(e);
    while (k > 0) {
      if (k & 1U) acc *= base;
      base *= base;
      k >>= 1U;
    }
    return acc;
  }

  // Full substitution; every variable must be assigned, and any variable
  // occurring with a negative exponent must receive a nonzero value.
  Rational eval(const std::map<std::string, Rational>& assignment) const {
    for (const std::string& v : vars_) {
      if (!assignment.count(v))
        throw DomainViolation("unassigned variable: " + v);
    }
    Rational total(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        const Rational& v = assignment.at(vars_[i]);
        if (v.is_zero() && e[i] < 0)
          throw ZeroAtNegativeExponent("variable " + vars_[i]);
        term *= v.pow(e[i]);
      }
      total += term;
    }
    return total;
  }

  // Substitute polynomials for variables (used to specialize parameters to
  // other symbols); every variable must be assigned.
  LaurentPoly subst(const std::map<std::string, LaurentPoly>& assignment) const {
    LaurentPoly total;
    for (const auto& [e, c] : terms_) {
      LaurentPoly term{c};
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end())
          throw DomainViolation("unassigned variable: " + vars_[i]);
        term *= it->second.pow(e[i]);
      }
      total += term;
    }
    return total;
  }

  // Exact division; throws if the divisor is zero or does not divide exactly.
  // Both operands are shifted by monomial units so all exponents are >= 0;
  // there graded-lex is well-founded and leading-term reduction either
  // terminates at zero or hits a non-divisible leading term (inexact input).
  LaurentPoly exact_divide(const LaurentPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (is_zero()) return LaurentPoly();
    if (d.is_single_term()) return *this * d.term_inverse();
    auto [pv, dv, vars] = aligned(*this, d);
    Exponents mp = min_exponents(pv), md = min_exponents(dv);
    TermMap p = shift(pv, mp), dd = shift(dv, md);
    const auto dlead = *dd.rbegin();
    LaurentPoly q;
    q.vars_ = vars;
    while (!p.empty()) {
      const auto plead = *p.rbegin();
      Exponents e(plead.first.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = plead.first[i] - dlead.first[i];
        if (e[i] < 0) throw std::logic_error("inexact Laurent division");
      }
      Rational c = plead.second / dlead.second;
      auto [it, fresh] = q.terms_.emplace(e, c);
      if (!fresh) it->second += c;
      for (const auto& [ed, cd] : dd) {
        Exponents em = e;
        for (std::size_t i = 0; i < em.size(); ++i) em[i] += ed[i];
        auto [pit, pfresh] = p.emplace(em, -(c * cd));
        if (!pfresh) {
          pit->second -= c * cd;
          if (pit->second.is_zero()) p.erase(pit);
        }
      }
    }
    q.normalize();
    // Undo the shifts: quotient gains x^(mp - md).
    LaurentPoly unit;
    unit.vars_ = vars;
    Exponents ue(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) ue[i] = mp[i] - md[i];
    unit.terms_[ue] = Rational(1);
    unit.strip_unused();
    return q * unit;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Total order consistent with equality, for use as an ordered container key.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    auto ai = a.terms_.begin(), bi = b.terms_.begin();
    GradedLexLess less;
    for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
      if (less(ai->first, bi->first)) return true;
      if (less(bi->first, ai->first)) return false;
      if (ai->second != bi->second) return ai->second < bi->second;
    }
    return ai == a.terms_.end() && bi != b.terms_.end();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Descending graded-lex: highest grade first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      bool neg = c < Rational(0);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_string(it->first);
      Rational a = neg ? -c : c;
      if (mono.empty()) {
        out += a.to_string();
      } else if (a.is_one()) {
        out += mono;
      } else {
        out += a.to_string() + "*" + mono;
      }
    }
    return out;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  std::string monomial_string(const Exponents& e) const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[i];
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero()) it = terms_.erase(it);
      else ++it;
    }
    strip_unused();
  }

  void strip_unused() {
    if (terms_.empty()) {
      vars_.clear();
      return;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) ne.push_back(e[i]);
      nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  static Exponents min_exponents(const TermMap& t) {
    Exponents m(t.begin()->first.size(), 0);
    bool first = true;
    for (const auto& [e, c] : t) {
      for (std::size_t i = 0; i < e.size(); ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  static TermMap shift(const TermMap& t, const Exponents& m) {
    TermMap out;
    for (const auto& [e, c] : t) {
      Exponents ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= m[i];
      out[ne] = c;
    }
    return out;
  }

  // Remap both operands onto the sorted union of their variable lists.
  static std::tuple<TermMap, TermMap, std::vector<std::string>> aligned(
      const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return {a.terms_, b.terms_, a.vars_};
    std::vector<std::string> vars;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                   b.vars_.end(), std::back_inserter(vars));
    return {remap(a, vars), remap(b, vars), vars};
  }

  static TermMap remap(const LaurentPoly& p, const std::vector<std::string>& vars) {
    std::vector<std::size_t> pos(p.vars_.size());
    for (std::size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = static_cast<std::size_t>(
          std::find(vars.begin(), vars.end(), p.vars_[i]) - vars.begin());
    TermMap out;
    for (const auto& [e, c] : p.terms_) {
      Exponents ne(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      out[ne] = c;
    }
    return out;
  }
};

}  // namespace triplet
