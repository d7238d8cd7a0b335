#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "triplet/matrix.hpp"

// Presentations of the braid-like group families, generic relation checking
// for matrix representation candidates, word evaluation, image-group closure
// and breadth-first kernel-witness search with an independent certifying
// oracle.

namespace triplet {

enum class PresentationKind {
  Braid,
  PureBraidGens,
  VirtualBraid,
  WeldedBraid,
  Triplet,
  VirtualTriplet,
  WeldedTriplet,
  SymmetricCoxeter,
};

inline std::string kind_name(PresentationKind k) {
  switch (k) {
    case PresentationKind::Braid: return "Braid";
    case PresentationKind::PureBraidGens: return "PureBraidGens";
    case PresentationKind::VirtualBraid: return "VirtualBraid";
    case PresentationKind::WeldedBraid: return "WeldedBraid";
    case PresentationKind::Triplet: return "Triplet";
    case PresentationKind::VirtualTriplet: return "VirtualTriplet";
    case PresentationKind::WeldedTriplet: return "WeldedTriplet";
    case PresentationKind::SymmetricCoxeter: return "SymmetricCoxeter";
  }
  return "?";
}

// Word in the presentation's generators; stored literally, not reduced.
class GroupWord {
 public:
  using Letter = std::pair<std::string, int>;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_)
      if (l.second != 1 && l.second != -1)
        throw DomainViolation("word exponents must be +-1");
  }

  static GroupWord gen(const std::string& label, int exp = 1) {
    return GroupWord({{label, exp}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(std::move(l));
  }

  GroupWord pow(int m) const {
    if (m < 0) throw DomainViolation("negative word power");
    GroupWord w;
    for (int i = 0; i < m; ++i) w = w * *this;
    return w;
  }

  GroupWord inverse() const {
    std::vector<Letter> l;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      l.emplace_back(it->first, -it->second);
    return GroupWord(std::move(l));
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }
  friend bool operator<(const GroupWord& a, const GroupWord& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const Letter& l : letters_) {
      if (!out.empty()) out += " ";
      out += l.first;
      if (l.second == -1) out += "^-1";
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

struct Relation {
  GroupWord lhs;
  GroupWord rhs;
  std::string tag;
};

struct Presentation {
  PresentationKind kind;
  int n = 0;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

namespace detail {
inline std::string lab(const char* prefix, int i) {
  return prefix + std::to_string(i);
}
inline GroupWord g1(const std::string& a) { return GroupWord::gen(a); }
inline GroupWord g2(const std::string& a, const std::string& b) {
  return GroupWord::gen(a) * GroupWord::gen(b);
}
inline GroupWord g3(const std::string& a, const std::string& b, const std::string& c) {
  return g2(a, b) * GroupWord::gen(c);
}

inline void add_involutions(Presentation& p, const char* x) {
  for (int i = 1; i <= p.n - 1; ++i) {
    std::string a = lab(x, i);
    p.relations.push_back({g2(a, a), GroupWord(), "inv " + a});
  }
}
inline void add_braid(Presentation& p, const char* x) {
  for (int i = 1; i <= p.n - 2; ++i) {
    std::string a = lab(x, i), b = lab(x, i + 1);
    p.relations.push_back({g3(a, b, a), g3(b, a, b), "braid " + a + " " + b});
  }
}
// Far commutativity xi yj = yj xi for |i - j| >= 2. For a single generator
// family each unordered pair appears once; for mixed families both
// orientations (x1, y3) and (x3, y1) are distinct pairs.
inline void add_far_comm(Presentation& p, const char* x, const char* y) {
  const bool same = std::string(x) == y;
  for (int i = 1; i <= p.n - 1; ++i)
    for (int j = same ? i + 2 : 1; j <= p.n - 1; ++j) {
      int gap = j > i ? j - i : i - j;
      if (gap < 2) continue;
      std::string a = lab(x, i), b = lab(y, j);
      p.relations.push_back({g2(a, b), g2(b, a), "comm " + a + " " + b});
    }
}
// r_i r_{i+1} x_i = x_{i+1} r_i r_{i+1}
inline void add_mixed(Presentation& p, const char* x) {
  for (int i = 1; i <= p.n - 2; ++i) {
    std::string ri = lab("r", i), ri1 = lab("r", i + 1);
    std::string xi = lab(x, i), xi1 = lab(x, i + 1);
    p.relations.push_back(
        {g3(ri, ri1, xi), g3(xi1, ri, ri1), "mixed " + ri + " " + ri1 + " " + xi});
  }
}
// r_i x_{i+1} x_i = x_{i+1} x_i r_{i+1}
inline void add_welded(Presentation& p, const char* x) {
  for (int i = 1; i <= p.n - 2; ++i) {
    std::string ri = lab("r", i), ri1 = lab("r", i + 1);
    std::string xi = lab(x, i), xi1 = lab(x, i + 1);
    p.relations.push_back(
        {g3(ri, xi1, xi), g3(xi1, xi, ri1), "welded " + ri + " " + xi1 + " " + xi});
  }
}
inline void add_generators(Presentation& p, const char* x) {
  for (int i = 1; i <= p.n - 1; ++i) p.generators.push_back(lab(x, i));
}
}  // namespace detail

inline Presentation presentation_of(PresentationKind kind, int n) {
  if (n < 2) throw UnsupportedN("presentations need n >= 2");
  Presentation p;
  p.kind = kind;
  p.n = n;
  using namespace detail;
  switch (kind) {
    case PresentationKind::Braid:
      add_generators(p, "s");
      add_braid(p, "s");
      add_far_comm(p, "s", "s");
      break;
    case PresentationKind::PureBraidGens:
      // Generators A_ij only; the defining relations are not cataloged.
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          p.generators.push_back("a" + std::to_string(i) + std::to_string(j));
      break;
    case PresentationKind::VirtualBraid:
      add_generators(p, "s");
      add_generators(p, "r");
      add_braid(p, "s");
      add_far_comm(p, "s", "s");
      add_involutions(p, "r");
      add_far_comm(p, "r", "r");
      add_braid(p, "r");
      add_far_comm(p, "s", "r");
      add_mixed(p, "s");
      break;
    case PresentationKind::WeldedBraid:
      add_generators(p, "s");
      add_generators(p, "r");
      add_braid(p, "s");
      add_far_comm(p, "s", "s");
      add_involutions(p, "r");
      add_far_comm(p, "r", "r");
      add_braid(p, "r");
      add_far_comm(p, "s", "r");
      add_mixed(p, "s");
      add_welded(p, "s");
      break;
    case PresentationKind::Triplet:
      add_generators(p, "l");
      add_involutions(p, "l");
      add_braid(p, "l");
      break;
    case PresentationKind::VirtualTriplet:
      add_generators(p, "l");
      add_generators(p, "r");
      add_involutions(p, "l");
      add_braid(p, "l");
      add_involutions(p, "r");
      add_far_comm(p, "r", "r");
      add_braid(p, "r");
      add_far_comm(p, "l", "r");
      add_mixed(p, "l");
      break;
    case PresentationKind::WeldedTriplet:
      add_generators(p, "l");
      add_generators(p, "r");
      add_involutions(p, "l");
      add_braid(p, "l");
      add_involutions(p, "r");
      add_far_comm(p, "r", "r");
      add_braid(p, "r");
      add_far_comm(p, "l", "r");
      add_mixed(p, "l");
      add_welded(p, "l");
      break;
    case PresentationKind::SymmetricCoxeter:
      add_generators(p, "a");
      add_involutions(p, "a");
      add_braid(p, "a");
      add_far_comm(p, "a", "a");
      break;
  }
  return p;
}

// The literal conjugated-square word for the pure braid generator A_ij.
inline GroupWord pure_braid_generator(int i, int j, int n) {
  if (i >= j) throw IndexOrder("need i < j");
  if (i < 1 || j > n) throw PositionOutOfRange("strand index");
  GroupWord w;
  for (int m = j - 1; m >= i + 1; --m) w = w * GroupWord::gen(detail::lab("s", m));
  w = w * GroupWord::gen(detail::lab("s", i)) * GroupWord::gen(detail::lab("s", i));
  for (int m = i + 1; m <= j - 1; ++m) w = w * GroupWord::gen(detail::lab("s", m), -1);
  return w;
}

template <ScalarRing T>
struct RepCandidate {
  Presentation presentation;
  std::map<std::string, Matrix<T>> images;
  std::string name;
  std::string params;

  int dim() const { return images.begin()->second.rows(); }

  const Matrix<T>& image(const std::string& label) const {
    auto it = images.find(label);
    if (it == images.end()) throw UnassignedGenerator("no image for " + label);
    return it->second;
  }

  void validate() const {
    if (images.empty()) throw UnassignedGenerator("no images");
    int d = dim();
    for (const auto& [lab, m] : images)
      if (m.rows() != d || m.cols() != d) throw DimensionMismatch("image " + lab);
    for (const std::string& g : presentation.generators)
      if (!images.count(g)) throw UnassignedGenerator("no image for " + g);
  }
};

// Swap the target presentation while keeping the images; used to test a
// candidate against a larger relation set (e.g. a virtual representation
// against the welded relations).
template <ScalarRing T>
RepCandidate<T> with_presentation(const RepCandidate<T>& rep, const Presentation& p) {
  RepCandidate<T> r = rep;
  r.presentation = p;
  r.validate();
  return r;
}

namespace detail {
template <ScalarRing T>
std::optional<T> try_unit_inverse(const T& x) {
  if constexpr (std::is_same_v<T, LaurentPoly>) {
    if (!x.is_single_term()) return std::nullopt;
  } else {
    if (x.is_zero()) return std::nullopt;
  }
  return scalar_inverse(x);
}

// Inverse of a matrix with exactly one invertible entry per row and column.
template <ScalarRing T>
std::optional<Matrix<T>> monomial_inverse(const Matrix<T>& m) {
  const int n = m.rows();
  if (m.cols() != n) return std::nullopt;
  Matrix<T> inv = Matrix<T>::zero(n, n, m.sample());
  std::vector<int> col_used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int nz = -1;
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (nz >= 0) return std::nullopt;
      nz = j;
    }
    if (nz < 0 || col_used[static_cast<std::size_t>(nz)]++) return std::nullopt;
    auto e = try_unit_inverse(m.at(i, nz));
    if (!e) return std::nullopt;
    inv.at(nz, i) = *e;
  }
  return inv;
}

template <ScalarRing T>
Matrix<T> invert_image(const Matrix<T>& m) {
  if (auto inv = monomial_inverse(m)) return *inv;
  if ((m * m).is_identity()) return m;
  throw NotInvertibleImage();
}
}  // namespace detail

template <ScalarRing T>
Matrix<T> word_eval(const RepCandidate<T>& rep, const GroupWord& w) {
  Matrix<T> acc = Matrix<T>::identity(rep.dim(), rep.images.begin()->second.sample());
  for (const auto& [label, exp] : w.letters()) {
    const Matrix<T>& m = rep.image(label);
    acc = acc * (exp == 1 ? m : detail::invert_image(m));
  }
  return acc;
}

struct RelationCheck {
  std::string tag;
  bool passed;
};

template <ScalarRing T>
std::vector<RelationCheck> check_relations(const RepCandidate<T>& rep) {
  rep.validate();
  std::vector<RelationCheck> out;
  out.reserve(rep.presentation.relations.size());
  for (const Relation& rel : rep.presentation.relations)
    out.push_back({rel.tag, word_eval(rep, rel.lhs) == word_eval(rep, rel.rhs)});
  return out;
}

template <ScalarRing T>
bool all_relations_pass(const RepCandidate<T>& rep) {
  for (const RelationCheck& c : check_relations(rep))
    if (!c.passed) return false;
  return true;
}

// Closure of the generator images under multiplication; the spanned group
// enumerated matrix by matrix with exact equality.
template <ScalarRing T>
std::vector<Matrix<T>> image_closure(const RepCandidate<T>& rep, int cap = 10000) {
  if (cap < 1) throw DomainViolation("cap must be positive");
  rep.validate();
  std::set<Matrix<T>> seen;
  std::vector<Matrix<T>> frontier;
  std::vector<Matrix<T>> gens;
  for (const std::string& g : rep.presentation.generators) gens.push_back(rep.image(g));
  for (const Matrix<T>& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Matrix<T>> next;
    for (const Matrix<T>& m : frontier)
      for (const Matrix<T>& g : gens) {
        Matrix<T> p = m * g;
        if (seen.insert(p).second) {
          if (static_cast<int>(seen.size()) > cap)
            throw CapExceeded("image closure exceeded cap");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Breadth-first search for a word that the candidate kills but a trusted
// oracle separates from the identity. Word order: shorter first, generators
// in label order, lexicographic tie-break, so the returned witness is
// canonical. Triplet-family generators are involutions, so only positive
// words are explored there; otherwise each letter also appears inverted.
template <ScalarRing T, ScalarRing O>
std::optional<GroupWord> kernel_witness_search(const RepCandidate<T>& rep,
                                               const RepCandidate<O>& oracle,
                                               int max_len) {
  rep.validate();
  oracle.validate();
  if (rep.presentation.kind != oracle.presentation.kind ||
      rep.presentation.n != oracle.presentation.n)
    throw UnsupportedPresentation("rep and oracle presentations differ");
  const bool involutive = rep.presentation.kind == PresentationKind::Triplet ||
                          rep.presentation.kind == PresentationKind::VirtualTriplet ||
                          rep.presentation.kind == PresentationKind::WeldedTriplet ||
                          rep.presentation.kind == PresentationKind::SymmetricCoxeter;
  std::vector<GroupWord::Letter> alphabet;
  for (const std::string& g : rep.presentation.generators) {
    alphabet.emplace_back(g, 1);
    if (!involutive) alphabet.emplace_back(g, -1);
  }
  struct Node {
    GroupWord word;
    Matrix<T> rep_m;
    Matrix<O> ora_m;
  };
  const Matrix<T> rep_id = Matrix<T>::identity(rep.dim(), rep.images.begin()->second.sample());
  const Matrix<O> ora_id =
      Matrix<O>::identity(oracle.dim(), oracle.images.begin()->second.sample());
  std::vector<Node> level{{GroupWord(), rep_id, ora_id}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    next.reserve(level.size() * alphabet.size());
    for (const Node& node : level)
      for (const auto& [label, exp] : alphabet) {
        const Matrix<T>& rg = rep.image(label);
        const Matrix<O>& og = oracle.image(label);
        Node child{node.word * GroupWord::gen(label, exp),
                   node.rep_m * (exp == 1 ? rg : detail::invert_image(rg)),
                   node.ora_m * (exp == 1 ? og : detail::invert_image(og))};
        if (child.rep_m.is_identity() && !child.ora_m.is_identity())
          return child.word;
        next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  return std::nullopt;
}

// Permutation matrix of the transposition (i, i+1) acting on n points.
inline Matrix<Rational> transposition_matrix(int n, int i) {
  Matrix<Rational> m = Matrix<Rational>::identity(n, Rational(0));
  m.at(i - 1, i - 1) = Rational(0);
  m.at(i, i) = Rational(0);
  m.at(i - 1, i) = Rational(1);
  m.at(i, i - 1) = Rational(1);
  return m;
}

enum class ProjectionKind { standard, forget_ell };

// The permutation projections onto S_n: "standard" sends every generator to
// the transposition (i, i+1); "forget_ell" kills the l-generators and keeps
// the r-generators as transpositions.
inline RepCandidate<Rational> sn_projection(ProjectionKind kind,
                                            const Presentation& p) {
  if (p.kind != PresentationKind::Triplet &&
      p.kind != PresentationKind::VirtualTriplet &&
      p.kind != PresentationKind::WeldedTriplet)
    throw UnsupportedPresentation("projection needs a triplet-family presentation");
  RepCandidate<Rational> rep;
  rep.presentation = p;
  rep.name = kind == ProjectionKind::standard ? "standard" : "forget_ell";
  for (const std::string& g : p.generators) {
    int i = std::stoi(g.substr(1));
    bool is_ell = g[0] == 'l';
    if (kind == ProjectionKind::forget_ell && is_ell) {
      rep.images.emplace(g, Matrix<Rational>::identity(p.n, Rational(0)));
    } else {
      rep.images.emplace(g, transposition_matrix(p.n, i));
    }
  }
  rep.validate();
  return rep;
}

// Explicit element lists for the finite triplet groups (orders 2 and 6).
inline std::vector<GroupWord> triplet_group_elements(int n) {
  GroupWord e;
  GroupWord l1 = GroupWord::gen("l1");
  if (n == 2) return {e, l1};
  if (n == 3) {
    GroupWord l2 = GroupWord::gen("l2");
    return {e, l1, l2, l1 * l2, l2 * l1, l1 * l2 * l1};
  }
  throw UnsupportedN("finite element lists exist for n = 2, 3 only");
}

}  // namespace triplet
