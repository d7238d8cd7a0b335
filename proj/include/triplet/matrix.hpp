#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplet/errors.hpp"
#include "triplet/scalar.hpp"

// Dense matrices over an exact scalar domain. Row-major, sized for desk-scale
// computation (everything in the verification suites is at most 12 x 12).

namespace triplet {

template <ScalarRing T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw DimensionMismatch("empty matrix");
    e_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  static Matrix zero(int rows, int cols, const T& proto) {
    return Matrix(rows, cols, zero_like(proto));
  }

  static Matrix identity(int n, const T& proto) {
    Matrix m = zero(n, n, proto);
    for (int i = 0; i < n; ++i) m.at(i, i) = one_like(proto);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    if (d.empty()) throw DimensionMismatch("empty diagonal");
    Matrix m = zero(static_cast<int>(d.size()), static_cast<int>(d.size()), d[0]);
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionMismatch("empty matrix");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size()) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const T& at(int r, int c) const {
    check_pos(r, c);
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }
  T& at(int r, int c) {
    check_pos(r, c);
    return e_[static_cast<std::size_t>(r) * cols_ + c];
  }

  const T& sample() const { return e_[0]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix r = zero(a.rows_, b.cols_, a.e_[0]);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!(a.e_[i] == b.e_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend bool operator<(const Matrix& a, const Matrix& b)
    requires requires(const T& x, const T& y) { x < y; }
  {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] < b.e_[i]) return true;
      if (b.e_[i] < a.e_[i]) return false;
    }
    return false;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T& x = at(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) return false;
      }
    return true;
  }

  Matrix transpose() const {
    Matrix r = zero(cols_, rows_, e_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<T> row_major() const { return e_; }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
      out += "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += at(i, j).to_string();
      }
      out += "]";
      if (i + 1 < rows_) out += "\n";
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<T> e_;

  void check_pos(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw PositionOutOfRange("entry (" + std::to_string(r) + ", " +
                               std::to_string(c) + ")");
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix sum");
  }
};

// Places a 2x2 block at rows/columns (i, i+1) of the n x n identity,
// 1-based position i with 1 <= i <= n-1.
template <ScalarRing T>
Matrix<T> block_embed(int n, int i, const Matrix<T>& b) {
  if (b.rows() != 2 || b.cols() != 2) throw DimensionMismatch("block must be 2x2");
  if (i < 1 || i > n - 1) throw PositionOutOfRange("block position " + std::to_string(i));
  Matrix<T> m = Matrix<T>::identity(n, b.sample());
  m.at(i - 1, i - 1) = b.at(0, 0);
  m.at(i - 1, i) = b.at(0, 1);
  m.at(i, i - 1) = b.at(1, 0);
  m.at(i, i) = b.at(1, 1);
  return m;
}

template <ScalarRing T>
Matrix<T> antidiag2(const T& upper, const T& lower) {
  Matrix<T> b = Matrix<T>::zero(2, 2, upper);
  b.at(0, 1) = upper;
  b.at(1, 0) = lower;
  return b;
}

// Determinant. Over fields: Gaussian elimination with division. Over the
// Laurent ring: fraction-free Bareiss elimination, whose interior divisions
// by the previous pivot are exact.
template <ScalarRing T>
T det(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant");
  const int n = m.rows();
  Matrix<T> a = m;
  bool negate = false;
  if constexpr (is_field_v<T>) {
    T d = one_like(m.sample());
    for (int k = 0; k < n; ++k) {
      int pivot = -1;
      for (int i = k; i < n; ++i)
        if (!a.at(i, k).is_zero()) { pivot = i; break; }
      if (pivot < 0) return zero_like(m.sample());
      if (pivot != k) {
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
        negate = !negate;
      }
      d *= a.at(k, k);
      for (int i = k + 1; i < n; ++i) {
        T f = a.at(i, k) / a.at(k, k);
        if (f.is_zero()) continue;
        for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      }
    }
    return negate ? -d : d;
  } else {
    T prev = one_like(m.sample());
    for (int k = 0; k + 1 < n; ++k) {
      int pivot = -1;
      for (int i = k; i < n; ++i)
        if (!a.at(i, k).is_zero()) { pivot = i; break; }
      if (pivot < 0) return zero_like(m.sample());
      if (pivot != k) {
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
        negate = !negate;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j)
          a.at(i, j) = scalar_exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j),
                                        prev);
        a.at(i, k) = zero_like(m.sample());
      }
      prev = a.at(k, k);
    }
    T d = a.at(n - 1, n - 1);
    return negate ? -d : d;
  }
}

// p^-1 * m * p for diagonal p with unit entries; the only inversion the
// library performs on the conjugating side.
template <ScalarRing T>
Matrix<T> conjugate(const Matrix<T>& p, const Matrix<T>& m) {
  if (p.rows() != p.cols() || m.rows() != m.cols() || p.rows() != m.rows())
    throw DimensionMismatch("conjugation");
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (i != j && !p.at(i, j).is_zero())
        throw NotInvertible("conjugator must be diagonal");
  std::vector<T> inv;
  inv.reserve(static_cast<std::size_t>(p.rows()));
  for (int i = 0; i < p.rows(); ++i) inv.push_back(scalar_inverse(p.at(i, i)));
  Matrix<T> r = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = inv[static_cast<std::size_t>(i)] * m.at(i, j) * p.at(j, j);
  return r;
}

}  // namespace triplet
