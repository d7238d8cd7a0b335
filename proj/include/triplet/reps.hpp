#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triplet/freegroup.hpp"
#include "triplet/groups.hpp"
#include "triplet/ratfun.hpp"

// Constructors for the concrete representations: the Tits representation,
// the twisted Magnus family mu / mu' / mu'', the homogeneous and
// non-homogeneous 2-local families, standard-type extensions, and the
// omega representations of the virtual triplet group.

namespace triplet {

// Exponent of the twisting unit: a concrete power t^k or a fresh symbol s
// standing for an arbitrary power of t.
struct MuExp {
  std::string var;
  int mult = 1;

  static MuExp concrete(int k) { return {"t", k}; }
  static MuExp symbolic() { return {"s", 1}; }

  LaurentPoly unit() const { return LaurentPoly::variable(var, mult); }
  LaurentPoly unit_inverse() const { return LaurentPoly::variable(var, -mult); }

  std::string to_string() const {
    if (var == "s") return "s";
    return "k=" + std::to_string(mult);
  }
};

// ---------------------------------------------------------------------------
// Tits representation

namespace detail {
// 3 x l block: zero row, all-2 row, zero row.
inline Matrix<Rational> tits_m_block(int l) {
  Matrix<Rational> m = Matrix<Rational>::zero(3, l, Rational(0));
  for (int j = 0; j < l; ++j) m.at(1, j) = Rational(2);
  return m;
}
// Rows 2 and 3 of the 3 x l block.
inline Matrix<Rational> tits_n_block(int l) {
  Matrix<Rational> m = Matrix<Rational>::zero(2, l, Rational(0));
  for (int j = 0; j < l; ++j) m.at(0, j) = Rational(2);
  return m;
}
// Rows 1 and 2 of the 3 x l block.
inline Matrix<Rational> tits_k_block(int l) {
  Matrix<Rational> m = Matrix<Rational>::zero(2, l, Rational(0));
  for (int j = 0; j < l; ++j) m.at(1, j) = Rational(2);
  return m;
}

template <ScalarRing T>
void place_block(Matrix<T>& dest, int r0, int c0, const Matrix<T>& src) {
  for (int r = 0; r < src.rows(); ++r)
    for (int c = 0; c < src.cols(); ++c) dest.at(r0 + r, c0 + c) = src.at(r, c);
}
}  // namespace detail

// The generator image Lambda_i of the Tits representation, an
// (n-1) x (n-1) integer matrix assembled from the three block cases.
inline Matrix<Rational> tits_lambda(int n, int i) {
  if (n < 3) throw UnsupportedN("Tits representation needs n >= 3");
  if (i < 1 || i > n - 1) throw PositionOutOfRange("generator index");
  const int d = n - 1;
  Matrix<Rational> m = Matrix<Rational>::identity(d, Rational(0));
  if (i == 1) {
    m.at(0, 0) = Rational(-1);
    m.at(0, 1) = Rational(1);
    m.at(1, 1) = Rational(1);
    if (n - 3 > 0) detail::place_block(m, 0, 2, detail::tits_n_block(n - 3));
  } else if (i <= n - 2) {
    Matrix<Rational> core = Matrix<Rational>::from_rows(
        {{Rational(1), Rational(0), Rational(0)},
         {Rational(1), Rational(-1), Rational(1)},
         {Rational(0), Rational(0), Rational(1)}});
    detail::place_block(m, i - 2, i - 2, core);
    if (i - 2 > 0) detail::place_block(m, i - 2, 0, detail::tits_m_block(i - 2));
    if (n - i - 2 > 0)
      detail::place_block(m, i - 2, i + 1, detail::tits_m_block(n - i - 2));
  } else {
    Matrix<Rational> core = Matrix<Rational>::from_rows(
        {{Rational(1), Rational(0)}, {Rational(1), Rational(-1)}});
    detail::place_block(m, d - 2, d - 2, core);
    if (n - 3 > 0) detail::place_block(m, d - 2, 0, detail::tits_k_block(n - 3));
  }
  return m;
}

inline RepCandidate<Rational> tits_theta(int n) {
  if (n < 3) throw UnsupportedN("Tits representation needs n >= 3");
  RepCandidate<Rational> rep;
  rep.presentation = presentation_of(PresentationKind::Triplet, n);
  rep.name = "tits";
  rep.params = "n=" + std::to_string(n);
  for (int i = 1; i <= n - 1; ++i)
    rep.images.emplace("l" + std::to_string(i), tits_lambda(n, i));
  rep.validate();
  return rep;
}

// The m x m matrix with diagonal -2, first off-diagonals 1 and all remaining
// entries 2, whose rows collect the linear forms arising from the Tits images.
inline Matrix<Rational> a_matrix(int m) {
  if (m < 1) throw UnsupportedN("a_matrix needs m >= 1");
  Matrix<Rational> a = Matrix<Rational>::zero(m, m, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j)
        a.at(i, j) = Rational(-2);
      else if (i - j == 1 || j - i == 1)
        a.at(i, j) = Rational(1);
      else
        a.at(i, j) = Rational(2);
    }
  return a;
}

// ---------------------------------------------------------------------------
// The twisted family mu (free-group automorphisms) and mu' (Magnus matrices)

// mu(l_i): x_i -> u x_{i+1}, x_{i+1} -> u^{-1} x_i, other generators fixed,
// where u is the twisting unit.
inline MonomialAutomorphism mu_aut(int n, int i, const MuExp& exp) {
  if (n < 2) throw UnsupportedN("mu needs n >= 2");
  if (i < 1 || i > n - 1) throw PositionOutOfRange("generator index");
  std::vector<ScaledWord> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j == i)
      im.emplace_back(exp.unit(), FreeWord::generator(j + 1));
    else if (j == i + 1)
      im.emplace_back(exp.unit_inverse(), FreeWord::generator(j - 1));
    else
      im.emplace_back(LaurentPoly(1), FreeWord::generator(j));
  }
  return MonomialAutomorphism(im);
}

inline std::map<std::string, MonomialAutomorphism> mu_aut_family(int n,
                                                                 const MuExp& exp) {
  std::map<std::string, MonomialAutomorphism> fam;
  for (int i = 1; i <= n - 1; ++i)
    fam.emplace("l" + std::to_string(i), mu_aut(n, i, exp));
  return fam;
}

// Inverse of a monomial automorphism: if a(x_i) = u x_j then a^{-1}(x_j) =
// u^{-1} x_i.
inline MonomialAutomorphism aut_inverse(const MonomialAutomorphism& a) {
  const int n = a.rank();
  std::vector<ScaledWord> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const ScaledWord& w = a.image(i);
    int j = w.word.letters().front().first;
    im[static_cast<std::size_t>(j - 1)] =
        ScaledWord(w.unit.term_inverse(), FreeWord::generator(i));
  }
  return MonomialAutomorphism(im);
}

// Fold a word into an automorphism left to right, so the rightmost letter
// acts first on the argument.
inline MonomialAutomorphism aut_of_word(
    const std::map<std::string, MonomialAutomorphism>& family, const GroupWord& w,
    int n) {
  MonomialAutomorphism acc = MonomialAutomorphism::identity(n);
  for (const auto& [label, exp] : w.letters()) {
    auto it = family.find(label);
    if (it == family.end()) throw UnassignedGenerator("no automorphism for " + label);
    acc = aut_compose(acc, exp == 1 ? it->second : aut_inverse(it->second));
  }
  return acc;
}

// Relation check at the automorphism level, before any matrix is taken.
inline std::vector<RelationCheck> check_mu_automorphism_relations(int n,
                                                                  const MuExp& exp) {
  const Presentation p = presentation_of(PresentationKind::Triplet, n);
  const auto fam = mu_aut_family(n, exp);
  std::vector<RelationCheck> out;
  out.reserve(p.relations.size());
  for (const Relation& rel : p.relations)
    out.push_back({rel.tag, aut_of_word(fam, rel.lhs, n) == aut_of_word(fam, rel.rhs, n)});
  return out;
}

// mu'(l_i) = block_embed(n, i, antidiag(u, u^{-1})), the Magnus matrix of
// mu(l_i).
inline RepCandidate<LaurentPoly> mu_matrix(int n, const MuExp& exp) {
  if (n < 2) throw UnsupportedN("mu needs n >= 2");
  RepCandidate<LaurentPoly> rep;
  rep.presentation = presentation_of(PresentationKind::Triplet, n);
  rep.name = "mu";
  rep.params = "n=" + std::to_string(n) + "," + exp.to_string();
  for (int i = 1; i <= n - 1; ++i)
    rep.images.emplace("l" + std::to_string(i),
                       block_embed(n, i, antidiag2(exp.unit(), exp.unit_inverse())));
  rep.validate();
  return rep;
}

// Diagonal change of basis P = diag(u^{n-1}, ..., u, 1).
inline Matrix<LaurentPoly> mu_conjugator(int n, const MuExp& exp) {
  if (n < 2) throw UnsupportedN("mu needs n >= 2");
  std::vector<LaurentPoly> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) d.push_back(exp.unit().pow(n - 1 - j));
  return Matrix<LaurentPoly>::diagonal(d);
}

// mu'' = P^{-1} mu' P; every image collapses to a 0/1 permutation block.
inline RepCandidate<LaurentPoly> mu_doubleprime(int n, const MuExp& exp) {
  RepCandidate<LaurentPoly> rep = mu_matrix(n, exp);
  const Matrix<LaurentPoly> p = mu_conjugator(n, exp);
  rep.name = "mu''";
  for (auto& [label, m] : rep.images) m = conjugate(p, m);
  return rep;
}

// ---------------------------------------------------------------------------
// 2-local representations and their extensions

// Homogeneous 2-local representation of the triplet group:
// l_i -> block_embed(n, i, antidiag(b, b^{-1})).
template <ScalarRing T>
RepCandidate<T> lambda_homog(int n, const T& b) {
  if (n < 3) throw UnsupportedN("lambda_homog needs n >= 3");
  if (b.is_zero()) throw ZeroParameter("b must be nonzero");
  RepCandidate<T> rep;
  rep.presentation = presentation_of(PresentationKind::Triplet, n);
  rep.name = "lambda";
  rep.params = "n=" + std::to_string(n);
  const Matrix<T> block = antidiag2(b, scalar_inverse(b));
  for (int i = 1; i <= n - 1; ++i)
    rep.images.emplace("l" + std::to_string(i), block_embed(n, i, block));
  rep.validate();
  return rep;
}

namespace detail {
template <FieldScalar T>
T fetch_param(const std::map<std::string, T>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainViolation("missing parameter " + key);
  return it->second;
}

template <FieldScalar T>
T scalar_div(const T& a, const T& b) {
  return a * scalar_inverse(b);
}
}  // namespace detail

// The four families of nontrivial 2-local representations of the rank-3
// triplet group, parameterized exactly as displayed. The proto argument
// supplies the scalar domain (it matters for prime fields); callers with a
// scalar type constructible from an integer may omit it.
template <FieldScalar T>
RepCandidate<T> l3_family(int j, const std::map<std::string, T>& params = {},
                          const T& proto = T(1)) {
  const T one = one_like(proto);
  const T zero = zero_like(proto);
  const T minus_one = -one;
  const T two = scalar_from_int(2, proto);
  const T half = detail::scalar_div(one, two);
  auto l1_block = [&](const T& a, const T& b, const T& c, const T& d) {
    Matrix<T> m = Matrix<T>::identity(3, proto);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
  };
  auto l2_block = [&](const T& e, const T& f, const T& g, const T& h) {
    Matrix<T> m = Matrix<T>::identity(3, proto);
    m.at(1, 1) = e;
    m.at(1, 2) = f;
    m.at(2, 1) = g;
    m.at(2, 2) = h;
    return m;
  };
  Matrix<T> left = Matrix<T>::identity(3, proto);
  Matrix<T> right = Matrix<T>::identity(3, proto);
  switch (j) {
    case 1: {
      const T b = detail::fetch_param(params, "b");
      const T e = detail::fetch_param(params, "e");
      const T f = detail::fetch_param(params, "f");
      if (b.is_zero()) throw DomainViolation("family 1 needs b != 0");
      if (e == one) throw DomainViolation("family 1 needs e != 1");
      if (f.is_zero()) throw DomainViolation("family 1 needs f != 0");
      const T em1 = e - one;
      left = l1_block(detail::scalar_div(e, one - e), b,
                      detail::scalar_div(one - two * e, b * em1 * em1),
                      detail::scalar_div(e, em1));
      right = l2_block(e, f, detail::scalar_div(one - e * e, f), -e);
      break;
    }
    case 2: {
      const T b = detail::fetch_param(params, "b");
      const T g = detail::fetch_param(params, "g");
      if (b.is_zero()) throw DomainViolation("family 2 needs b != 0");
      const T three_quarters =
          detail::scalar_div(scalar_from_int(3, proto), scalar_from_int(4, proto));
      left = l1_block(-half, b, detail::scalar_div(three_quarters, b), half);
      right = l2_block(minus_one, zero, g, one);
      break;
    }
    case 3: {
      const T c = detail::fetch_param(params, "c");
      const T f = detail::fetch_param(params, "f");
      if (f.is_zero()) throw DomainViolation("family 3 needs f != 0");
      const T three_quarters =
          detail::scalar_div(scalar_from_int(3, proto), scalar_from_int(4, proto));
      left = l1_block(one, zero, c, minus_one);
      right = l2_block(half, f, detail::scalar_div(three_quarters, f), -half);
      break;
    }
    case 4:
      left = l1_block(one, zero, zero, minus_one);
      right = l2_block(minus_one, zero, zero, one);
      break;
    default:
      throw DomainViolation("family index must be 1..4");
  }
  RepCandidate<T> rep;
  rep.presentation = presentation_of(PresentationKind::Triplet, 3);
  rep.name = "l3_family";
  rep.params = "j=" + std::to_string(j);
  rep.images.emplace("l1", left);
  rep.images.emplace("l2", right);
  rep.validate();
  return rep;
}

namespace detail {
// A generator image is 2-local at index i when it is the identity outside
// the 2 x 2 block at rows and columns (i, i+1).
template <ScalarRing T>
bool is_two_local_at(const Matrix<T>& m, int i) {
  if (m.rows() != m.cols() || i + 1 > m.rows()) return false;
  Matrix<T> block(2, 2, m.sample());
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) block.at(r, c) = m.at(i - 1 + r, i - 1 + c);
  return block_embed(m.rows(), i, block) == m;
}
}  // namespace detail

// Standard-type extension to the virtual triplet group:
// l_i keeps its image, r_i -> sign * image(l_i). Requires a 2-local input.
template <ScalarRing T>
RepCandidate<T> extend_standard(const RepCandidate<T>& lambda, int sign) {
  if (sign != 1 && sign != -1) throw DomainViolation("sign must be +-1");
  if (lambda.presentation.kind != PresentationKind::Triplet)
    throw UnsupportedPresentation("extension starts from a triplet-group representation");
  lambda.validate();
  const int n = lambda.presentation.n;
  for (int i = 1; i <= n - 1; ++i)
    if (!detail::is_two_local_at(lambda.image("l" + std::to_string(i)), i))
      throw NotTwoLocal();
  RepCandidate<T> rep;
  rep.presentation = presentation_of(PresentationKind::VirtualTriplet, n);
  rep.name = sign == 1 ? "lambda_hat_plus" : "lambda_hat_minus";
  rep.params = lambda.params;
  for (int i = 1; i <= n - 1; ++i) {
    const Matrix<T>& m = lambda.image("l" + std::to_string(i));
    rep.images.emplace("l" + std::to_string(i), m);
    if (sign == 1) {
      rep.images.emplace("r" + std::to_string(i), m);
    } else {
      Matrix<T> neg = Matrix<T>::zero(m.rows(), m.cols(), m.sample()) - m;
      rep.images.emplace("r" + std::to_string(i), neg);
    }
  }
  rep.validate();
  return rep;
}

// The two homogeneous 2-local representations of the virtual triplet group:
// variant 1 uses blocks antidiag(b, 1/b) on l and antidiag(x, 1/x) on r;
// variant 2 sends every l to the identity.
template <ScalarRing T>
RepCandidate<T> omega(int n, int variant, const T& b, const T& x) {
  if (n < 2) throw UnsupportedN("omega needs n >= 2");
  if (variant != 1 && variant != 2) throw DomainViolation("variant must be 1 or 2");
  if (x.is_zero()) throw ZeroParameter("x must be nonzero");
  if (variant == 1 && b.is_zero()) throw ZeroParameter("b must be nonzero");
  RepCandidate<T> rep;
  rep.presentation = presentation_of(PresentationKind::VirtualTriplet, n);
  rep.name = variant == 1 ? "omega1" : "omega2";
  rep.params = "n=" + std::to_string(n);
  const Matrix<T> rho_block = antidiag2(x, scalar_inverse(x));
  for (int i = 1; i <= n - 1; ++i) {
    if (variant == 1) {
      rep.images.emplace("l" + std::to_string(i),
                         block_embed(n, i, antidiag2(b, scalar_inverse(b))));
    } else {
      rep.images.emplace("l" + std::to_string(i), Matrix<T>::identity(n, x));
    }
    rep.images.emplace("r" + std::to_string(i), block_embed(n, i, rho_block));
  }
  rep.validate();
  return rep;
}

}  // namespace triplet
