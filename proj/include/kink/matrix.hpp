#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "kink/error.hpp"

namespace kink {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from a numerator and
/// denominator must go through make_rational().
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::BadRational, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

/// Rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::SizeMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> v;
    for (const auto& row : rows) {
      IntVector r;
      for (long x : row) r.emplace_back(x);
      v.push_back(std::move(r));
    }
    return from_rows(v);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::SizeMismatch, "matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Exact symmetric matrix over the rationals. Any n >= 0; n == 0 is the empty
/// matrix. Symmetry is checked on construction from user data.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// n x n zero matrix.
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static SymMatrix identity(std::size_t n, int scale = 1) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = scale;
    return m;
  }

  static SymMatrix diagonal(const RatVector& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.data_[i * d.size() + i] = d[i];
    return m;
  }

  static SymMatrix from_rows(const std::vector<RatVector>& rows) {
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorCode::SizeMismatch, "matrix is not square");
      for (std::size_t j = 0; j < n; ++j) m.data_[i * n + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m(i, j) != m(j, i))
          throw Error(ErrorCode::NotSymmetric,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
    return m;
  }

  static SymMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RatVector> v;
    for (const auto& row : rows) {
      RatVector r;
      for (long x : row) r.emplace_back(x);
      v.push_back(std::move(r));
    }
    return from_rows(v);
  }

  static SymMatrix from_int(const IntMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "matrix is not square");
    std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rational(m(i, j));
    return from_rows(rows);
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  bool is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return is_integer(q); });
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  SymMatrix operator-() const {
    SymMatrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
  }

  /// this ⊕ [eps]
  SymMatrix direct_sum(const Rational& eps) const {
    SymMatrix m(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.data_[i * (n_ + 1) + j] = (*this)(i, j);
    m.data_[n_ * (n_ + 1) + n_] = eps;
    return m;
  }

  SymMatrix direct_sum(const SymMatrix& other) const {
    const std::size_t n = n_ + other.n_;
    SymMatrix m(n);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.data_[i * n + j] = (*this)(i, j);
    for (std::size_t i = 0; i < other.n_; ++i)
      for (std::size_t j = 0; j < other.n_; ++j) m.data_[(n_ + i) * n + n_ + j] = other(i, j);
    return m;
  }

  /// Leading principal submatrix of size k.
  SymMatrix leading(std::size_t k) const {
    SymMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.data_[i * k + j] = (*this)(i, j);
    return m;
  }

  /// x^T G y
  Rational bilinear(const RatVector& x, const RatVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      Rational row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += (*this)(i, j) * y[j];
      s += x[i] * row;
    }
    return s;
  }

  Rational quadratic(const RatVector& x) const { return bilinear(x, x); }

  Rational quadratic(const IntVector& x) const {
    RatVector r(x.begin(), x.end());
    return quadratic(r);
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t size() const noexcept { return n_plus + n_minus + n_zero; }
  long signature() const noexcept { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

}  // namespace kink
