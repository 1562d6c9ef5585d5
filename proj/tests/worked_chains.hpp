#pragma once

// Worked chains and diagram data shared by the unit tests and the acceptance
// runner.

#include <string>

#include "kink/goeritz.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"

namespace kink::worked {

inline SymMatrix counterexample_a() {
  return SymMatrix::from_rows({{2, 1, 1, 1, 0, 0},
                               {1, 2, 1, 1, 1, 0},
                               {1, 1, 2, 1, 1, 1},
                               {1, 1, 1, 2, 1, 1},
                               {0, 1, 1, 1, 2, 1},
                               {0, 0, 1, 1, 1, 2}});
}

/// [5] ~ [[1,2],[0,1]] diag(5,-1) [[1,2],[0,1]]^T ~ diag(-5,1) ~ [-5].
inline Trace five_chain() {
  Trace t;
  t.start = SymMatrix::diagonal({5});
  t.moves = {Kink{-1}, Congruence{IntMatrix::from_rows({{1, 2}, {0, 1}})},
             Congruence{IntMatrix::from_rows({{-2, -1}, {-1, 0}})}, Unkink{+1}};
  t.end = SymMatrix::diagonal({-5});
  return t;
}

namespace detail {

inline IntMatrix identity_with(std::size_t n, std::size_t i, std::size_t j, long v) {
  IntMatrix p = IntMatrix::identity(n);
  p(i, j) = v;
  return p;
}

/// [[1, 0], [-v, I]] built from the first column of g.
inline IntMatrix clearing(const SymMatrix& g) {
  IntMatrix p = IntMatrix::identity(g.size());
  for (std::size_t i = 1; i < g.size(); ++i) p(i, 0) = -g(i, 0).get_num();
  return p;
}

/// [[0, I], [1, 0]]: moves the first basis vector last.
inline IntMatrix cycle(std::size_t n) {
  IntMatrix p(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = 1;
  p(n - 1, 0) = 1;
  return p;
}

}  // namespace detail

/// A = A0 -> ... -> A13 = [[-2,-1],[-1,-2]]. Each step that permutes the basis
/// and clears a row is recorded as two congruences, clearing first.
inline Trace a6_chain() {
  using detail::clearing;
  using detail::cycle;
  Trace t;
  t.start = counterexample_a();
  SymMatrix cur = t.start;
  auto push = [&](Move m) {
    cur = apply_move(cur, m);
    t.moves.push_back(std::move(m));
  };

  push(Kink{-1});                                   // A1
  push(Congruence{detail::identity_with(7, 0, 6, 1)});  // A2
  push(Congruence{clearing(cur)});
  push(Congruence{cycle(7)});  // A3
  push(Unkink{+1});            // A4

  IntMatrix lower = IntMatrix::identity(6);
  for (std::size_t i = 3; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) lower(i, j) = -cur(i, j).get_num();
  push(Congruence{lower});
  push(Congruence{IntMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 1},
                                        {1, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0}})});  // A5
  push(Unkink{+1});
  push(Unkink{+1});
  push(Unkink{+1});  // A6

  push(Congruence{IntMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {-3, 0, 1}})});
  push(Congruence{IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})});  // A7
  push(Congruence{clearing(cur)});
  push(Congruence{cycle(3)});  // A8
  push(Unkink{+1});            // A9

  push(Congruence{IntMatrix::from_rows({{0, 1}, {1, 0}})});
  push(Kink{-1});                                                             // A10
  push(Congruence{IntMatrix::from_rows({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}})});  // A11
  push(Congruence{clearing(cur)});
  push(Congruence{cycle(3)});  // A12
  push(Unkink{+1});            // A13

  t.end = SymMatrix::from_rows({{-2, -1}, {-1, -2}});
  return t;
}

/// Four-region diagram whose Goeritz matrix is [[2,-1,0],[-1,4,-1],[0,-1,3]].
inline const std::string kFigureGoeritz =
    "regions 4\n"
    "0 1 +\n"
    "1 2 +\n"
    "0 2 +\n"
    "0 2 +\n"
    "2 3 +\n"
    "0 3 +\n"
    "0 3 +\n";

/// Trefoil, dark checkerboard surface: three crossings between two regions.
inline const std::string kTrefoilDark =
    "regions 2\n"
    "0 1 +\n"
    "0 1 +\n"
    "0 1 +\n";

/// Trefoil, light checkerboard surface: one negative crossing per region pair.
inline const std::string kTrefoilLight =
    "regions 3\n"
    "0 1 -\n"
    "1 2 -\n"
    "0 2 -\n";

}  // namespace kink::worked
