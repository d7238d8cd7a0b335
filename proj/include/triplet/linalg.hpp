#pragma once

#include <map>
#include <optional>
#include <vector>

#include "triplet/matrix.hpp"

// Span and invariant-vector computations over a field: the Burnside-style
// irreducibility test reduces to the dimension of the enveloping algebra's
// span, and reducibility witnesses come from common fixed vectors.

namespace triplet {

// Reduced row echelon basis maintained incrementally.
template <FieldScalar T>
class RowSpace {
 public:
  // Inserts v into the span; returns true when the rank grew.
  bool insert(std::vector<T> v) {
    for (const auto& [p, row] : rows_) reduce(v, p, row);
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) { pivot = static_cast<int>(j); break; }
    if (pivot < 0) return false;
    T inv = scalar_inverse(v[static_cast<std::size_t>(pivot)]);
    for (auto& x : v) x = x * inv;
    for (auto& [p, row] : rows_) reduce(row, pivot, v);
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, std::vector<T>> rows_;

  static void reduce(std::vector<T>& v, int pivot, const std::vector<T>& row) {
    const T& f = v[static_cast<std::size_t>(pivot)];
    if (f.is_zero()) return;
    T c = f;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * row[j];
  }
};

// Dimension of the unital algebra spanned by the generators, computed by
// closing the identity and the generators under multiplication on both sides
// until the row space stabilizes. Equals n^2 exactly when the generators act
// absolutely irreducibly.
template <FieldScalar T>
int algebra_span_dimension(const std::vector<Matrix<T>>& gens, int cap = 10000) {
  if (gens.empty()) throw DimensionMismatch("no generators");
  const int n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("mixed sizes");
  RowSpace<T> space;
  std::vector<Matrix<T>> frontier;
  auto offer = [&](const Matrix<T>& m) {
    if (space.insert(m.row_major())) frontier.push_back(m);
  };
  offer(Matrix<T>::identity(n, gens[0].sample()));
  for (const auto& g : gens) offer(g);
  int rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > cap) throw CapExceeded("span closure exceeded cap");
    std::vector<Matrix<T>> current;
    current.swap(frontier);
    for (const auto& m : current)
      for (const auto& g : gens) {
        offer(m * g);
        offer(g * m);
      }
  }
  return space.rank();
}

// A common solution of (g - I) v = 0 over all generators, when one exists.
// The returned vector sets the first free coordinate of the stacked system
// to one, so a one-dimensional fixed space yields its canonical
// representative (e.g. the all-ones vector for permutation images).
template <FieldScalar T>
std::optional<std::vector<T>> common_fixed_vector(const std::vector<Matrix<T>>& gens) {
  if (gens.empty()) throw DimensionMismatch("no generators");
  const int n = gens[0].rows();
  const T proto = gens[0].sample();
  std::vector<std::vector<T>> rows;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("mixed sizes");
    for (int i = 0; i < n; ++i) {
      std::vector<T> row;
      row.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        T v = g.at(i, j);
        if (i == j) v = v - one_like(proto);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
  }
  // Gaussian elimination to reduced echelon form.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(c)].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    T inv = scalar_inverse(rows[r][static_cast<std::size_t>(c)]);
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const T f = rows[i][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        rows[i][static_cast<std::size_t>(j)] =
            rows[i][static_cast<std::size_t>(j)] - f * rows[r][static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(pivot_col.size()) == n) return std::nullopt;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
    ++free_col;
  std::vector<T> v(static_cast<std::size_t>(n), zero_like(proto));
  v[static_cast<std::size_t>(free_col)] = one_like(proto);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    v[static_cast<std::size_t>(pivot_col[i])] =
        -rows[i][static_cast<std::size_t>(free_col)];
  return v;
}

// Entry-wise casts between scalar domains used to move representations into
// a field before span computations.

inline Matrix<Rational> to_rational(const Matrix<LaurentPoly>& m) {
  Matrix<Rational> r = Matrix<Rational>::zero(m.rows(), m.cols(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).constant_value();
  return r;
}

inline Matrix<Rational> specialize(const Matrix<LaurentPoly>& m,
                                   const std::map<std::string, Rational>& assignment) {
  Matrix<Rational> r = Matrix<Rational>::zero(m.rows(), m.cols(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(assignment);
  return r;
}

inline Matrix<RationalFunction> to_ratfun(const Matrix<LaurentPoly>& m) {
  Matrix<RationalFunction> r =
      Matrix<RationalFunction>::zero(m.rows(), m.cols(), RationalFunction());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = RationalFunction(m.at(i, j));
  return r;
}

}  // namespace triplet
