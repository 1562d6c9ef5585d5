#pragma once

// Constructive reduction of a symmetric matrix to a negative- (or, by
// negation, positive-) semidefinite representative of its kink-equivalence
// class. Each elimination round removes one positive eigenvalue using at most
// four negative kinks (five for rational input) and exactly one positive
// unkink.

#include <array>
#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kink/error.hpp"
#include "kink/linalg.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"

namespace kink {

enum class Target { NegDefinite, PosDefinite, NegSemidefinite, PosSemidefinite };

using MoveList = std::vector<Move>;

namespace detail {

inline Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

/// Nontrivial factor of an odd composite n (Pollard rho, Floyd cycle).
inline Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      const Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  for (unsigned long p = 17; p < 1000 && Integer(p) * p <= n; p += 2)
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    const Integer r = isqrt(n);
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

inline std::map<Integer, unsigned> factorize(const Integer& n) {
  std::map<Integer, unsigned> out;
  factor_into(n, out);
  return out;
}

/// (u, v) with u^2 + v^2 = p for a prime p = 1 mod 4 (Hermite-Serret descent).
inline std::pair<Integer, Integer> prime_two_squares(const Integer& p) {
  Integer q = 2;
  while (mpz_legendre(q.get_mpz_t(), p.get_mpz_t()) != -1) ++q;
  Integer r0 = p, r1;
  const Integer e = (p - 1) / 4;
  mpz_powm(r1.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  while (r1 * r1 > p) {
    Integer r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return {r1, isqrt(p - r1 * r1)};
}

/// Largest c <= cap with n - c^2 = d^2 and d <= c, if any. All representations
/// of n as a sum of two squares come from products of Gaussian prime powers.
inline std::optional<Integer> largest_two_square_leg(const Integer& n, const Integer& cap) {
  if (n == 0) return Integer(0);
  using Gaussian = std::pair<Integer, Integer>;
  auto mul = [](const Gaussian& x, const Gaussian& y) -> Gaussian {
    return {x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
  };
  Gaussian base{1, 0};
  std::vector<std::vector<Gaussian>> choices;
  for (const auto& [p, e] : factorize(n)) {
    if (p == 2) {
      for (unsigned t = 0; t < e; ++t) base = mul(base, {1, 1});
    } else if (p % 4 == 3) {
      if (e % 2) return std::nullopt;
      for (unsigned t = 0; t < e / 2; ++t) base = mul(base, {p, 0});
    } else {
      const auto [u, v] = prime_two_squares(p);
      std::vector<Gaussian> pw{{1, 0}}, cpw{{1, 0}};
      for (unsigned t = 0; t < e; ++t) {
        pw.push_back(mul(pw.back(), {u, v}));
        cpw.push_back(mul(cpw.back(), {u, -v}));
      }
      std::vector<Gaussian> opts;
      for (unsigned j = 0; j <= e; ++j) opts.push_back(mul(pw[j], cpw[e - j]));
      choices.push_back(std::move(opts));
    }
  }
  std::vector<Gaussian> reps{base};
  for (const auto& opts : choices) {
    std::vector<Gaussian> next;
    for (const auto& z : reps)
      for (const auto& w : opts) next.push_back(mul(z, w));
    reps = std::move(next);
  }
  std::optional<Integer> best;
  for (const auto& [x, y] : reps) {
    const Integer c = std::max(abs(x), abs(y));
    if (c <= cap && (!best || c > *best)) best = c;
  }
  return best;
}

/// Legendre: m is a sum of three squares unless m = 4^s (8t + 7).
inline bool is_sum_of_three_squares(Integer m) {
  if (m == 0) return true;
  while (mpz_divisible_ui_p(m.get_mpz_t(), 4)) m /= 4;
  return m % 8 != 7;
}

}  // namespace detail

/// a >= b >= c >= d >= 0 with a^2 + b^2 + c^2 + d^2 = k, the lexicographically
/// greatest such tuple. a and b are scanned downwards; the best c for a given
/// remainder is read off its two-square representations.
inline std::array<Integer, 4> four_squares(const Integer& k) {
  if (k < 0) throw Error(ErrorCode::ParseError, "four_squares needs k >= 0");
  using detail::isqrt;
  // a is the largest of the four, so 4a^2 >= k; likewise 3b^2 >= k - a^2.
  for (Integer a = isqrt(k); 4 * a * a >= k; --a) {
    const Integer ra = k - a * a;
    if (detail::is_sum_of_three_squares(ra)) {
      Integer b = isqrt(ra);
      if (b > a) b = a;
      for (; 3 * b * b >= ra; --b) {
        const Integer rb = ra - b * b;
        if (auto c = detail::largest_two_square_leg(rb, b)) return {a, b, *c, isqrt(rb - *c * *c)};
        if (b == 0) break;
      }
    }
    if (a == 0) break;
  }
  // Lagrange guarantees a decomposition exists.
  throw Error(ErrorCode::BoundViolation, "no four-square decomposition found");
}

namespace detail {

/// Power iteration on G + sI, s = 1 + max absolute row sum, so that the
/// shifted matrix is positive definite and the iteration converges to an
/// eigenvector of the largest eigenvalue of G. Each iterate is divided by its
/// largest-magnitude entry and then rounded to a multiple of 2^-48, which keeps
/// the rationals small without changing where the iteration heads. Every
/// iterate is tested through its roundings 2^p u for p = 0..16 and then as is;
/// the first positive candidate wins.
inline constexpr unsigned kIterateBits = 48;

inline std::optional<IntVector> power_iteration_vector(const SymMatrix& g, std::size_t max_iterations = 64) {
  const std::size_t n = g.size();
  // Everything runs on D G with D the common denominator, and on iterates
  // u = m / 2^48 held as integer vectors m; signs and ratios are unchanged.
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g(i, j).get_den_mpz_t());
  std::vector<IntVector> h(n, IntVector(n));
  Integer shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      h[i][j] = g(i, j).get_num() * (den / g(i, j).get_den());
      row += abs(h[i][j]);
    }
    if (row > shift) shift = row;
  }
  shift += den;

  auto positive = [&](const IntVector& v) {
    Integer q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < n; ++j) row += h[i][j] * v[j];
      q += v[i] * row;
    }
    return q > 0;
  };
  // x / 2^k rounded to nearest, halves away from zero.
  auto round_shift = [](const Integer& x, unsigned k) {
    if (k == 0) return x;
    const Integer r = (abs(x) + (Integer(1) << (k - 1))) >> k;
    return x < 0 ? Integer(-r) : r;
  };

  IntVector m(n, Integer(1) << kIterateBits);
  for (std::size_t it = 0; it <= max_iterations; ++it) {
    for (unsigned bits = 0; bits <= 16; ++bits) {
      IntVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = round_shift(m[i], kIterateBits - bits);
      if (positive(v)) return primitive_scale(RatVector(v.begin(), v.end()));
    }
    if (positive(m)) return primitive_scale(RatVector(m.begin(), m.end()));
    IntVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = shift * m[i];
      for (std::size_t j = 0; j < n; ++j) s += h[i][j] * m[j];
      y[i] = std::move(s);
    }
    std::size_t big = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (abs(y[i]) > abs(y[big])) big = i;
    if (y[big] == 0) return std::nullopt;
    // m = round(2^48 y / |y_big|)
    const Integer scale = 2 * abs(y[big]);
    for (std::size_t i = 0; i < n; ++i) {
      const Integer r = ((abs(y[i]) << (kIterateBits + 1)) + abs(y[big])) / scale;
      m[i] = y[i] < 0 ? Integer(-r) : r;
    }
  }
  return std::nullopt;
}

/// Congruence diagonalization over Q that also tracks the basis change Q with
/// Q G Q^T diagonal; the row of Q at the first positive pivot is a witness.
/// Always succeeds when G has a positive eigenvalue.
inline IntVector diagonalization_witness(const SymMatrix& g) {
  const std::size_t n = g.size();
  std::vector<RatVector> w(n, RatVector(n));
  std::vector<RatVector> q(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    q[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) w[i][j] = g(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (w[i][i] > 0) pivot = i;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (w[i][i] != 0) pivot = i;
    if (pivot == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (w[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      // Basis vector pi becomes e_pi + e_pj, or e_pi - e_pj, whichever is positive.
      const Rational s = w[pi][pj] > 0 ? 1 : -1;
      for (std::size_t c = k; c < n; ++c) w[pi][c] += s * w[pj][c];
      for (std::size_t r = k; r < n; ++r) w[r][pi] += s * w[r][pj];
      for (std::size_t c = 0; c < n; ++c) q[pi][c] += s * q[pj][c];
      pivot = pi;
    }
    std::swap(w[k], w[pivot]);
    for (auto& row : w) std::swap(row[k], row[pivot]);
    std::swap(q[k], q[pivot]);

    if (w[k][k] > 0) return primitive_scale(q[k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (w[r][k] == 0) continue;
      const Rational f = w[r][k] / w[k][k];
      for (std::size_t c = k + 1; c < n; ++c) w[r][c] -= f * w[k][c];
      for (std::size_t c = 0; c < n; ++c) q[r][c] -= f * q[k][c];
      w[r][k] = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) w[k][c] = 0;
  }
  throw Error(ErrorCode::NoPositiveEigenvalue, "matrix has no positive eigenvalue");
}

inline IntMatrix first_to_last_permutation(std::size_t n) {
  IntMatrix p(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = 1;
  if (n > 0) p(n - 1, 0) = 1;
  return p;
}

inline void push_congruence(MoveList& moves, SymMatrix& g, IntMatrix p) {
  if (p.is_identity()) return;
  g = congruence(g, p);
  moves.emplace_back(Congruence{std::move(p)});
}

inline void push_kink(MoveList& moves, SymMatrix& g, int sign) {
  g = g.direct_sum(Rational(sign));
  moves.emplace_back(Kink{sign});
}

inline void push_unkink(MoveList& moves, SymMatrix& g, int sign) {
  g = apply_move(g, Unkink{sign});
  moves.emplace_back(Unkink{sign});
}

}  // namespace detail

/// Primitive integer b with b^T G b > 0. Search order: first positive
/// diagonal entry; then e_i + e_j, e_i - e_j in index order; then shifted
/// power iteration; finally a witness read off an exact
/// congruence diagonalization.
inline IntVector find_positive_vector(const SymMatrix& g) {
  if (inertia(g).n_plus == 0) throw Error(ErrorCode::NoPositiveEigenvalue, "matrix has no positive eigenvalue");
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) > 0) {
      IntVector e(n, Integer(0));
      e[i] = 1;
      return e;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (long s : {1L, -1L}) {
        Rational value = g(i, i) + g(j, j) + Rational(2 * s) * g(i, j);
        if (value > 0) {
          IntVector v(n, Integer(0));
          v[i] = 1;
          v[j] = s;
          return v;
        }
      }
  if (auto b = detail::power_iteration_vector(g)) return *b;
  return detail::diagonalization_witness(g);
}

/// Makes the first row integral when it is not, at the cost of one negative
/// kink. With first row (k/d, v^T/d), d the lcm of its denominators, G ⊕ [-1]
/// is conjugated by [[d, 0, 1], [0, I, 0], [d-1, 0, 1]] (determinant 1), giving
/// top-left entry dk - 1 >= 1.
inline std::pair<SymMatrix, MoveList> integralize_first_row(const SymMatrix& g) {
  if (g.size() == 0 || g(0, 0) <= 0) throw Error(ErrorCode::NonpositiveCorner, "top-left entry must be positive");
  const std::size_t n = g.size();
  Integer d = 1;
  for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), g(0, j).get_den_mpz_t());
  if (d == 1) return {g, {}};

  MoveList moves;
  SymMatrix cur = g;
  detail::push_kink(moves, cur, -1);
  IntMatrix p = IntMatrix::identity(n + 1);
  p(0, 0) = d;
  p(0, n) = 1;
  p(n, 0) = d - 1;
  p(n, n) = 1;
  detail::push_congruence(moves, cur, std::move(p));
  return {std::move(cur), std::move(moves)};
}

namespace detail {

/// One round: Step 1 congruence, integralization (rational input only), four
/// squares kinks, the clearing congruence, the first-to-last permutation, and
/// one positive unkink.
inline std::pair<SymMatrix, MoveList> elimination_round(const SymMatrix& g) {
  MoveList moves;
  SymMatrix cur = g;

  const IntVector b = find_positive_vector(cur);
  // First row of P is b, so the new top-left entry is b^T G b.
  push_congruence(moves, cur, extend_primitive(b).transpose());

  auto [integral, extra] = integralize_first_row(cur);
  cur = std::move(integral);
  for (auto& m : extra) moves.push_back(std::move(m));

  const Integer k = cur(0, 0).get_num();
  const auto squares = four_squares(k - 1);
  const std::size_t n = cur.size();
  std::vector<Integer> used;
  for (const auto& s : squares)
    if (s != 0) used.push_back(s);
  for (std::size_t t = 0; t < used.size(); ++t) push_kink(moves, cur, -1);
  IntMatrix spread = IntMatrix::identity(cur.size());
  for (std::size_t t = 0; t < used.size(); ++t) spread(0, n + t) = used[t];
  push_congruence(moves, cur, std::move(spread));

  const std::size_t m = cur.size();
  IntMatrix clear = IntMatrix::identity(m);
  for (std::size_t i = 1; i < m; ++i) clear(i, 0) = -cur(i, 0).get_num();
  push_congruence(moves, cur, std::move(clear));
  push_congruence(moves, cur, first_to_last_permutation(m));
  push_unkink(moves, cur, +1);
  return {std::move(cur), std::move(moves)};
}

}  // namespace detail

/// One elimination round on an integer matrix: n_plus drops by one.
inline std::pair<SymMatrix, MoveList> eliminate_positive(const SymMatrix& g) {
  if (!g.is_integral()) throw Error(ErrorCode::NotIntegral, "eliminate_positive needs integer entries");
  return detail::elimination_round(g);
}

namespace detail {

inline Trace reduce_to_negative(const SymMatrix& g) {
  Trace t{g, {}, g};
  SymMatrix cur = g;
  while (inertia(cur).n_plus > 0) {
    auto [next, moves] = elimination_round(cur);
    cur = std::move(next);
    for (auto& m : moves) t.moves.push_back(std::move(m));
  }
  t.end = std::move(cur);
  return t;
}

}  // namespace detail

/// Kink-equivalence trace from G to a representative of the requested
/// (semi)definiteness. The trace is replayed through verify_trace and the move
/// counts are checked against the 4n (integer) / 5n (rational) bounds before
/// it is returned.
inline Trace reduce(const SymMatrix& g, Target target) {
  const bool definite = target == Target::NegDefinite || target == Target::PosDefinite;
  const bool positive = target == Target::PosDefinite || target == Target::PosSemidefinite;
  if (definite && determinant(g) == 0)
    throw Error(ErrorCode::SingularForDefiniteTarget, "definite representatives exist only for nonsingular matrices");

  const Inertia in = inertia(g);
  Trace t = positive ? negate_trace(detail::reduce_to_negative(-g)) : detail::reduce_to_negative(g);

  const VerificationReport rep = verify_trace(t);
  if (!rep.valid) throw Error(ErrorCode::BoundViolation, "reduction produced an invalid trace: " + rep.message);

  const TraceStats s = count_moves(t.moves);
  const std::size_t eliminated = positive ? in.n_minus : in.n_plus;
  const std::size_t per_round = g.is_integral() ? 4 : 5;
  const std::size_t kinks = positive ? s.pos_kinks : s.neg_kinks;
  const std::size_t wrong_kinks = positive ? s.neg_kinks : s.pos_kinks;
  const std::size_t unkinks = positive ? s.neg_unkinks : s.pos_unkinks;
  const std::size_t wrong_unkinks = positive ? s.pos_unkinks : s.neg_unkinks;
  if (kinks > per_round * eliminated || wrong_kinks != 0 || unkinks != eliminated || wrong_unkinks != 0)
    throw Error(ErrorCode::BoundViolation, "move counts exceed the stabilization bound");

  const Inertia out = inertia(t.end);
  const bool shape_ok = positive ? out.n_minus == 0 : out.n_plus == 0;
  if (!shape_ok || out.n_zero != in.n_zero || abs(determinant(t.end)) != abs(determinant(g)))
    throw Error(ErrorCode::BoundViolation, "end matrix does not have the target shape");
  return t;
}

}  // namespace kink
