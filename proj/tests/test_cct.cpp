#include <gtest/gtest.h>

#include "generators.hpp"
#include "kink/cct.hpp"
#include "kink/io.hpp"
#include "kink/linalg.hpp"
#include "oracles.hpp"
#include "worked_chains.hpp"

using namespace kink;

namespace {

SymMatrix int_sym(std::initializer_list<std::initializer_list<long>> rows) { return SymMatrix::from_rows(rows); }

void expect_reduced(const SymMatrix& r) {
  const Rational a = r(0, 0), b = r(0, 1), c = r(1, 1);
  EXPECT_LE(abs(b), a);
  EXPECT_LE(a, c);
  if (a == abs(b) || a == c) {
    EXPECT_GE(b, 0);
  }
}

}  // namespace

TEST(Icct, SquarePlusOne) {
  for (long n = 0; n <= 5; ++n) {
    const Trace t = icct_trace(IntMatrix::from_rows({{n}}));
    EXPECT_EQ(t.start, SymMatrix::diagonal({Rational(n * n + 1)}));
    EXPECT_EQ(t.end, SymMatrix::diagonal({Rational(-(n * n + 1))}));
    EXPECT_TRUE(verify_trace(t).valid) << n;
  }
}

TEST(Icct, EmptyColumns) {
  const Trace t = icct_trace(IntMatrix(2, 0));
  EXPECT_EQ(t.start, SymMatrix::identity(2));
  EXPECT_EQ(t.end, SymMatrix(0));
  ASSERT_EQ(t.moves.size(), 2u);
  EXPECT_EQ(std::get<Unkink>(t.moves[0]).sign, +1);
  EXPECT_TRUE(verify_trace(t).valid);
}

TEST(Icct, TwoByOne) {
  const Trace t = icct_trace(IntMatrix::from_rows({{1}, {1}}));
  EXPECT_EQ(t.start, int_sym({{2, 1}, {1, 2}}));
  EXPECT_EQ(t.end, SymMatrix::diagonal({-3}));
  EXPECT_TRUE(verify_trace(t).valid);
}

TEST(Icct, MoveShape) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    const IntMatrix c = gen::int_rect(rng, n, m, 3);
    const Trace t = icct_trace(c);
    const auto rep = verify_trace(t);
    ASSERT_TRUE(rep.valid) << rep.message;
    SymMatrix start = gram(c), end = gram(c.transpose());
    for (std::size_t i = 0; i < n; ++i) start.set(i, i, start(i, i) + 1);
    for (std::size_t i = 0; i < m; ++i) end.set(i, i, end(i, i) + 1);
    EXPECT_EQ(t.start, start);
    EXPECT_EQ(t.end, -end);
    EXPECT_EQ(inertia(t.start), (Inertia{n, 0, 0}));
    EXPECT_EQ(inertia(t.end), (Inertia{0, m, 0}));
    const TraceStats s = count_moves(t.moves);
    EXPECT_EQ(s.neg_kinks, m);
    EXPECT_EQ(s.pos_unkinks, n);
    EXPECT_LE(s.congruences, 3u);
  }
}

TEST(Gram, Canonicalize) {
  const GramFactor f = canonicalize(IntMatrix::from_rows({{0, -1, 1, 0}, {1, -1, 0, 0}}));
  EXPECT_EQ(f.c, IntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(gram(f.c), int_sym({{2, 1}, {1, 2}}));
}

TEST(CctSearch, Examples) {
  auto f = cct_search(int_sym({{2}}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->c, IntMatrix::from_rows({{1, 1}}));

  f = cct_search(int_sym({{2, 1}, {1, 2}}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->c, IntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}}));

  f = cct_search(SymMatrix(2));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->c.cols(), 0u);
}

TEST(CctSearch, Counterexample) {
  const SymMatrix a = worked::counterexample_a();
  EXPECT_FALSE(cct_search(a).has_value());
  EXPECT_FALSE(oracle::RandomizedGramSearch(a, 7).exists());
}

TEST(CctSearch, Errors) {
  try {
    cct_search(int_sym({{1, 2}, {2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveSemidefinite);
  }
  try {
    cct_search(SymMatrix::diagonal({make_rational(1, 2)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIntegral);
  }
}

TEST(CctSearch, FoundFactorsAreCanonicalAndExact) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix c = gen::int_rect(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 3)),
                                      static_cast<std::size_t>(gen::uniform(rng, 0, 3)), 2);
    const SymMatrix g = gram(c);
    const auto f = cct_search(g);
    ASSERT_TRUE(f) << trial;
    EXPECT_EQ(gram(f->c), g);
    EXPECT_EQ(canonicalize(f->c).c, f->c);
  }
}

TEST(CctSearch, AgreesWithRandomizedOracle) {
  gen::Rng rng(43);
  int checked = 0;
  while (checked < 80) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    SymMatrix g = gen::int_matrix(rng, n, 3);
    // Shift the diagonal until the matrix is positive semidefinite.
    while (inertia(g).n_minus > 0)
      for (std::size_t i = 0; i < n; ++i) g.set(i, i, g(i, i) + 1);
    if (g.trace() > 12) continue;
    const bool found = cct_search(g).has_value();
    for (std::uint32_t seed : {1u, 2u}) ASSERT_EQ(oracle::RandomizedGramSearch(g, seed).exists(), found) << format_inline(g);
    ++checked;
  }
}

TEST(CctSearch, AgreesWithRandomizedOracleOnGramMatrices) {
  gen::Rng rng(46);
  int checked = 0;
  while (checked < 80) {
    const IntMatrix c = gen::int_rect(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 4)),
                                      static_cast<std::size_t>(gen::uniform(rng, 1, 4)), 2);
    const SymMatrix g = gram(c);
    if (g.trace() > 12) continue;
    const auto f = cct_search(g);
    ASSERT_TRUE(f) << format_inline(g);
    ASSERT_TRUE(oracle::RandomizedGramSearch(g, 3).exists()) << format_inline(g);
    ++checked;
  }
}

TEST(BinaryForm, Examples) {
  auto [r, e] = reduce_binary_form(int_sym({{5, 3}, {3, 6}}));
  EXPECT_EQ(r, int_sym({{5, 2}, {2, 5}}));
  EXPECT_TRUE(is_unimodular(e));
  EXPECT_EQ(congruence(r, e), int_sym({{5, 3}, {3, 6}}));

  // a = c with b < 0 violates the boundary sign rule, so this form moves.
  std::tie(r, e) = reduce_binary_form(int_sym({{2, -1}, {-1, 2}}));
  EXPECT_EQ(r, int_sym({{2, 1}, {1, 2}}));
  EXPECT_EQ(congruence(r, e), int_sym({{2, -1}, {-1, 2}}));

  std::tie(r, e) = reduce_binary_form(int_sym({{2, 1}, {1, 3}}));
  EXPECT_EQ(r, int_sym({{2, 1}, {1, 3}}));
  EXPECT_EQ(e, IntMatrix::identity(2));
}

TEST(BinaryForm, Errors) {
  auto code_of = [](const SymMatrix& g) {
    try {
      reduce_binary_form(g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of(int_sym({{1, 1}, {1, 1}})), ErrorCode::NotPositiveDefinite);
  EXPECT_EQ(code_of(int_sym({{-1, 0}, {0, -1}})), ErrorCode::NotPositiveDefinite);
  EXPECT_EQ(code_of(SymMatrix::identity(3)), ErrorCode::Not2x2);
  EXPECT_EQ(code_of(SymMatrix::diagonal({make_rational(1, 2), Rational(1)})), ErrorCode::NotIntegral);
}

TEST(BinaryForm, RandomPositiveDefinite) {
  gen::Rng rng(44);
  int checked = 0;
  while (checked < 300) {
    const SymMatrix a = gen::int_matrix(rng, 2, 40);
    if (inertia(a) != (Inertia{2, 0, 0})) continue;
    const auto [r, e] = reduce_binary_form(a);
    expect_reduced(r);
    ASSERT_TRUE(is_unimodular(e));
    ASSERT_EQ(congruence(r, e), a);
    ASSERT_EQ(determinant(r), determinant(a));
    ++checked;
  }
}

TEST(Cct2x2, Examples) {
  EXPECT_EQ(cct_2x2(int_sym({{2, 1}, {1, 2}})).c, IntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(cct_2x2(SymMatrix::identity(2)).c, IntMatrix::identity(2));
  const GramFactor f = cct_2x2(int_sym({{5, 2}, {2, 5}}));
  EXPECT_EQ(f.c, IntMatrix::from_rows({{1, 1, 1, 1, 1, 0, 0, 0}, {1, 1, 0, 0, 0, 1, 1, 1}}));
  EXPECT_EQ(gram(f.c), int_sym({{5, 2}, {2, 5}}));
}

TEST(Cct2x2, RandomPositiveDefinite) {
  gen::Rng rng(45);
  int checked = 0;
  while (checked < 200) {
    const SymMatrix a = gen::int_matrix(rng, 2, 30);
    if (inertia(a) != (Inertia{2, 0, 0})) continue;
    const GramFactor f = cct_2x2(a);
    ASSERT_EQ(gram(f.c), a);
    ASSERT_EQ(canonicalize(f.c).c, f.c);
    ++checked;
  }
}
