#pragma once

// Exact linear algebra over Z and Q: inertia, determinants, unimodular
// congruence and primitive-vector basis extension.

#include <cstddef>
#include <utility>
#include <vector>

#include "kink/error.hpp"
#include "kink/matrix.hpp"

namespace kink {

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting. Destroys m.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}

inline Integer lcm_of_denominators(const RatVector& v) {
  Integer d = 1;
  for (const auto& q : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

inline Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace detail

inline Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return detail::bareiss_determinant(std::move(rows));
}

/// Exact determinant; the empty matrix has determinant 1. Runs Bareiss on the
/// integer matrix D*G, D the lcm of all denominators, and divides by D^n.
inline Rational determinant(const SymMatrix& g) {
  const std::size_t n = g.size();
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), g(i, j).get_den_mpz_t());
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = g(i, j) * Rational(d);
      rows[i][j] = scaled.get_num();
    }
  Integer num = detail::bareiss_determinant(std::move(rows));
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), n);
  return make_rational(num, den);
}

/// Sign counts of the eigenvalues, by symmetric congruence diagonalization
/// over Q (Sylvester). When every remaining diagonal entry is zero but some
/// g_ij is not, row/column j is added to i, which makes g_ii = 2 g_ij != 0.
inline Inertia inertia(const SymMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = g(i, j);

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(w[a], w[b]);
    for (auto& row : w) std::swap(row[a], row[b]);
  };

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (w[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (w[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        result.n_zero += n - k;
        break;
      }
      for (std::size_t c = k; c < n; ++c) w[pi][c] += w[pj][c];
      for (std::size_t r = k; r < n; ++r) w[r][pi] += w[r][pj];
      pivot = pi;
    }
    swap_index(k, pivot);

    const Rational p = w[k][k];
    if (p > 0)
      ++result.n_plus;
    else
      ++result.n_minus;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (w[r][k] == 0) continue;
      const Rational f = w[r][k] / p;
      for (std::size_t c = k + 1; c < n; ++c) w[r][c] -= f * w[k][c];
      w[r][k] = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) w[k][c] = 0;
  }
  return result;
}

inline bool is_unimodular(const IntMatrix& p) {
  if (!p.is_square()) return false;
  const Integer d = determinant(p);
  return d == 1 || d == -1;
}

/// P G P^T for unimodular P.
inline SymMatrix congruence(const SymMatrix& g, const IntMatrix& p) {
  if (!p.is_square() || p.rows() != g.size())
    throw Error(ErrorCode::SizeMismatch, "congruence matrix is " + std::to_string(p.rows()) + "x" +
                                             std::to_string(p.cols()) + ", matrix is " +
                                             std::to_string(g.size()) + "x" + std::to_string(g.size()));
  if (!is_unimodular(p)) throw Error(ErrorCode::NotUnimodular, "congruence matrix has determinant other than +-1");
  const std::size_t n = g.size();
  // pg = P G
  std::vector<Rational> pg(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (p(i, k) == 0) continue;
      const Rational pik(p(i, k));
      for (std::size_t j = 0; j < n; ++j) pg[i * n + j] += pik * g(k, j);
    }
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (p(j, k) != 0) s += pg[i * n + k] * p(j, k);
      out.set(i, j, s);
    }
  return out;
}

/// Unimodular n x n matrix whose first column is the primitive vector b.
///
/// Row operations reduce b to e1 (a Euclidean sweep on the smallest nonzero
/// entry); the inverse of each operation is applied to the columns of an
/// accumulator, so the accumulator ends as W^{-1} with W b = e1. The result
/// is normalized to determinant +1 and the trailing columns are reduced
/// modulo the first, so (2, 3) gives [[2, 1], [3, 2]].
inline IntMatrix extend_primitive(const IntVector& b) {
  const std::size_t n = b.size();
  if (n == 0) throw Error(ErrorCode::ZeroVector, "empty vector");
  const Integer g = detail::gcd_of(b);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "vector is zero");
  if (g != 1) throw Error(ErrorCode::NotPrimitive, "entries have gcd " + g.get_str());

  IntMatrix p = IntMatrix::identity(n);
  IntVector v = b;

  auto add_column = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < n; ++r) p(r, dst) += q * p(r, src);
  };

  for (;;) {
    std::size_t pivot = n;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      ++nonzero;
      if (pivot == n || abs(v[i]) < abs(v[pivot])) pivot = i;
    }
    if (nonzero == 1) {
      if (v[pivot] < 0) {
        v[pivot] = -v[pivot];
        for (std::size_t r = 0; r < n; ++r) p(r, pivot) = -p(r, pivot);
      }
      if (pivot != 0) {
        std::swap(v[0], v[pivot]);
        for (std::size_t r = 0; r < n; ++r) std::swap(p(r, 0), p(r, pivot));
      }
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot || v[i] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), v[pivot].get_mpz_t());
      // row_i -= q row_pivot on v; inverse on columns: col_pivot += q col_i
      v[i] -= q * v[pivot];
      add_column(pivot, i, q);
    }
  }

  if (n >= 2 && determinant(p) < 0)
    for (std::size_t r = 0; r < n; ++r) p(r, n - 1) = -p(r, n - 1);

  std::size_t lead = 0;
  while (b[lead] == 0) ++lead;
  const Integer modulus = abs(b[lead]);
  for (std::size_t j = 1; j < n; ++j) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), p(lead, j).get_mpz_t(), modulus.get_mpz_t());
    if (b[lead] < 0) q = -q;
    if (q != 0) add_column(j, 0, Integer(-q));
  }
  return p;
}

/// The primitive integer vector on the ray through u: scale by the lcm of the
/// denominators, then divide by the gcd of the resulting integers.
inline IntVector primitive_scale(const RatVector& u) {
  if (u.empty()) throw Error(ErrorCode::ZeroVector, "empty vector");
  const Integer d = detail::lcm_of_denominators(u);
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational s = u[i] * Rational(d);
    out[i] = s.get_num();
  }
  const Integer g = detail::gcd_of(out);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "vector is zero");
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace kink
