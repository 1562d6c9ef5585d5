#pragma once

// Gram decompositions G = C C^T over the integers: the I + CC^T trace to
// -(I + C^T C), an exhaustive canonical search for integer Gram factors, and
// the 2x2 case through Gauss reduction of binary forms.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kink/error.hpp"
#include "kink/linalg.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"

namespace kink {

/// Integer C with G = C C^T, columns in canonical form: no zero columns, first
/// nonzero entry of each column positive, columns in descending
/// lexicographic order.
struct GramFactor {
  IntMatrix c;

  friend bool operator==(const GramFactor&, const GramFactor&) = default;
};

inline SymMatrix gram(const IntMatrix& c) {
  const std::size_t n = c.rows();
  SymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < c.cols(); ++k) s += c(i, k) * c(j, k);
      g.set(i, j, Rational(s));
    }
  return g;
}

/// Canonical column form of C; C C^T is unchanged.
inline GramFactor canonicalize(const IntMatrix& c) {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    IntVector col = c.column(j);
    auto first = std::find_if(col.begin(), col.end(), [](const Integer& x) { return x != 0; });
    if (first == col.end()) continue;
    if (*first < 0)
      for (auto& x : col) x = -x;
    cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  IntMatrix out(c.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < c.rows(); ++i) out(i, j) = cols[j][i];
  return GramFactor{std::move(out)};
}

/// Trace from I_n + C C^T to -(I_m + C^T C) for an n x m integer C: m negative
/// kinks, the block congruences [[I, C], [0, I]] and [[I, 0], [C^T, I]], a
/// block swap, then n positive unkinks. Identity congruences are omitted.
inline Trace icct_trace(const IntMatrix& c) {
  const std::size_t n = c.rows();
  const std::size_t m = c.cols();
  const std::size_t total = n + m;

  SymMatrix start = gram(c);
  for (std::size_t i = 0; i < n; ++i) start.set(i, i, start(i, i) + 1);

  Trace t{start, {}, {}};
  SymMatrix cur = start;
  auto push = [&](Move mv) {
    if (const auto* cg = std::get_if<Congruence>(&mv); cg && cg->p.is_identity()) return;
    cur = apply_move(cur, mv);
    t.moves.push_back(std::move(mv));
  };

  for (std::size_t k = 0; k < m; ++k) push(Kink{-1});

  IntMatrix upper = IntMatrix::identity(total);
  IntMatrix lower = IntMatrix::identity(total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      upper(i, n + j) = c(i, j);
      lower(n + j, i) = c(i, j);
    }
  push(Congruence{std::move(upper)});
  push(Congruence{std::move(lower)});

  IntMatrix swap(total, total);
  for (std::size_t j = 0; j < m; ++j) swap(j, n + j) = 1;
  for (std::size_t i = 0; i < n; ++i) swap(m + i, i) = 1;
  push(Congruence{std::move(swap)});

  for (std::size_t i = 0; i < n; ++i) push(Unkink{+1});
  t.end = std::move(cur);
  return t;
}

namespace detail {

/// Depth-first search for a canonical n x width factor, filling C row by row
/// and each row left to right with entries tried in increasing order, so the
/// first hit is the row-major lexicographically least canonical factor.
class GramSearch {
 public:
  GramSearch(const std::vector<std::vector<Integer>>& g, std::size_t width)
      : g_(g), n_(g.size()), width_(width), c_(n_, std::vector<Integer>(width, Integer(0))),
        suffix_(n_, std::vector<Integer>(width + 1, Integer(0))),
        dot_left_(n_, std::vector<Integer>(n_)) {}

  bool run() { return n_ == 0 || start_row(0); }

  IntMatrix result() const {
    IntMatrix out(n_, width_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < width_; ++j) out(i, j) = c_[i][j];
    return out;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  bool start_row(std::size_t i) {
    if (i == n_) return true;
    for (std::size_t r = 0; r < i; ++r) dot_left_[i][r] = g_[i][r];
    return fill(i, 0, g_[i][i]);
  }

  // Columns j-1 and j agree on rows 0..i-1.
  bool same_prefix(std::size_t i, std::size_t j) const {
    for (std::size_t r = 0; r < i; ++r)
      if (c_[r][j - 1] != c_[r][j]) return false;
    return true;
  }

  bool zero_prefix(std::size_t i, std::size_t j) const {
    for (std::size_t r = 0; r < i; ++r)
      if (c_[r][j] != 0) return false;
    return true;
  }

  bool fill(std::size_t i, std::size_t j, const Integer& norm_left) {
    ++nodes_;
    // Cauchy-Schwarz on the unfilled part of the row.
    for (std::size_t r = 0; r < i; ++r)
      if (dot_left_[i][r] * dot_left_[i][r] > norm_left * suffix_[r][j]) return false;

    if (j == width_) {
      if (norm_left != 0) return false;
      for (std::size_t r = 0; r < i; ++r)
        if (dot_left_[i][r] != 0) return false;
      for (std::size_t k = width_; k-- > 0;) suffix_[i][k] = suffix_[i][k + 1] + c_[i][k] * c_[i][k];
      return start_row(i + 1);
    }

    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), norm_left.get_mpz_t());
    Integer lo = -bound;
    Integer hi = bound;
    if (zero_prefix(i, j) && lo < 0) lo = 0;
    if (j > 0 && same_prefix(i, j) && hi > c_[i][j - 1]) hi = c_[i][j - 1];

    for (Integer v = lo; v <= hi; ++v) {
      c_[i][j] = v;
      for (std::size_t r = 0; r < i; ++r) dot_left_[i][r] -= v * c_[r][j];
      const bool found = fill(i, j + 1, norm_left - v * v);
      if (found) return true;
      for (std::size_t r = 0; r < i; ++r) dot_left_[i][r] += v * c_[r][j];
    }
    c_[i][j] = 0;
    return false;
  }

  const std::vector<std::vector<Integer>>& g_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Integer>> c_;
  std::vector<std::vector<Integer>> suffix_;  // suffix_[r][j] = sum_{k>=j} c_[r][k]^2
  // dot_left_[i][r] = G_ir minus the inner product of the filled parts of rows i and r.
  std::vector<std::vector<Integer>> dot_left_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Searches for an integer C with C C^T = G. Every nonzero column adds at
/// least 1 to trace(C C^T), so at most trace(G) columns are needed; together
/// with the canonical column form this makes the search space finite.
/// Returns nullopt once that space is exhausted.
inline std::optional<GramFactor> cct_search(const SymMatrix& g) {
  if (!g.is_integral()) throw Error(ErrorCode::NotIntegral, "Gram search needs integer entries");
  if (inertia(g).n_minus != 0) throw Error(ErrorCode::NotPositiveSemidefinite, "matrix has a negative eigenvalue");
  const std::size_t n = g.size();
  std::vector<std::vector<Integer>> entries(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i][j] = g(i, j).get_num();
  const std::size_t width = g.trace().get_num().get_ui();

  detail::GramSearch search(entries, width);
  if (!search.run()) return std::nullopt;
  return canonicalize(search.result());
}

/// Gauss reduction of a positive-definite binary form. Returns the reduced
/// A' = [[a, b], [b, c]] (-a < 2b <= a <= c, and b >= 0 when a = c) and a
/// unimodular E with A = E A' E^T. Such an A' also satisfies |b| <= a <= c
/// with b >= 0 whenever a = |b| or a = c.
inline std::pair<SymMatrix, IntMatrix> reduce_binary_form(const SymMatrix& a_in) {
  if (a_in.size() != 2) throw Error(ErrorCode::Not2x2, "binary form needs a 2x2 matrix");
  if (!a_in.is_integral()) throw Error(ErrorCode::NotIntegral, "binary form needs integer entries");
  if (inertia(a_in) != Inertia{2, 0, 0}) throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite");

  Integer a = a_in(0, 0).get_num();
  Integer b = a_in(0, 1).get_num();
  Integer c = a_in(1, 1).get_num();
  IntMatrix q = IntMatrix::identity(2);  // current = q A q^T

  // [[1, 0], [t, 1]]: b -> b + t a, c -> c + 2 t b + t^2 a
  auto shear = [&](const Integer& t) {
    c += 2 * t * b + t * t * a;
    b += t * a;
    q = IntMatrix::from_rows(std::vector<IntVector>{{1, 0}, {t, 1}}) * q;
  };
  // [[0, -1], [1, 0]]: (a, b, c) -> (c, -b, a)
  auto rotate = [&]() {
    std::swap(a, c);
    b = -b;
    q = IntMatrix::from_rows({{0, -1}, {1, 0}}) * q;
  };

  for (;;) {
    if (!(-a < 2 * b && 2 * b <= a)) {
      Integer t;
      Integer num = a - 2 * b;
      Integer den = 2 * a;
      mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      shear(t);
    }
    if (a > c) {
      rotate();
      continue;
    }
    if (a == c && b < 0) rotate();
    break;
  }

  // E = q^{-1}; det q = 1 since every step has determinant 1.
  IntMatrix e = IntMatrix::from_rows(std::vector<IntVector>{{q(1, 1), -q(0, 1)}, {-q(1, 0), q(0, 0)}});
  SymMatrix reduced(2);
  reduced.set(0, 0, Rational(a));
  reduced.set(0, 1, Rational(b));
  reduced.set(1, 1, Rational(c));
  return {std::move(reduced), std::move(e)};
}

/// Integer Gram factor of a positive-definite 2x2 matrix: on the reduced form,
/// a - |b| copies of e1, c - |b| copies of e2 and |b| copies of (1, sgn b);
/// then C = E C'.
inline GramFactor cct_2x2(const SymMatrix& a) {
  auto [reduced, e] = reduce_binary_form(a);
  const Integer ra = reduced(0, 0).get_num();
  const Integer rb = reduced(0, 1).get_num();
  const Integer rc = reduced(1, 1).get_num();
  const Integer ab = abs(rb);
  const Integer a1 = ra - ab;
  const Integer c1 = rc - ab;
  const std::size_t cols = Integer(a1 + c1 + ab).get_ui();
  IntMatrix base(2, cols);
  std::size_t j = 0;
  for (Integer k = 0; k < a1; ++k, ++j) base(0, j) = 1;
  for (Integer k = 0; k < c1; ++k, ++j) base(1, j) = 1;
  for (Integer k = 0; k < ab; ++k, ++j) {
    base(0, j) = 1;
    base(1, j) = sgn(rb);
  }
  return canonicalize(e * base);
}

}  // namespace kink
