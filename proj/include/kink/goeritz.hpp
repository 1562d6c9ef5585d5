#pragma once

// Goeritz matrices of checkerboard-shaded diagrams from crossing incidence
// data. A diagram lists its white regions 0..N-1 and, per crossing, the two
// white regions meeting there with the crossing sign eta.
//
// Text format:
//   regions N
//   i j s        (one crossing per line, s is + or -)
// '#' starts a comment; blank lines are ignored.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kink/error.hpp"
#include "kink/matrix.hpp"

namespace kink {

struct Crossing {
  std::size_t region_a = 0;
  std::size_t region_b = 0;
  int eta = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Diagram {
  std::size_t region_count = 1;
  std::vector<Crossing> crossings;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

namespace detail {

inline std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  std::string s(line.substr(0, hash));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_index(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace detail

inline Diagram parse_diagram(std::string_view text) {
  Diagram d;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);

    if (!have_header) {
      std::size_t n = 0;
      if (tok.size() != 2 || tok[0] != "regions" || !detail::parse_index(tok[1], n))
        throw ParseFailure(ErrorCode::ParseError, lineno, "expected 'regions N'");
      if (n < 1) throw ParseFailure(ErrorCode::RegionOutOfRange, lineno, "a diagram needs at least one region");
      d.region_count = n;
      have_header = true;
      continue;
    }

    Crossing c;
    if (tok.size() != 3 || !detail::parse_index(tok[0], c.region_a) || !detail::parse_index(tok[1], c.region_b))
      throw ParseFailure(ErrorCode::ParseError, lineno, "expected 'i j s'");
    if (tok[2] == "+")
      c.eta = 1;
    else if (tok[2] == "-")
      c.eta = -1;
    else
      throw ParseFailure(ErrorCode::ParseError, lineno, "crossing sign must be + or -");
    if (c.region_a >= d.region_count || c.region_b >= d.region_count)
      throw ParseFailure(ErrorCode::RegionOutOfRange, lineno, "region label out of range");
    if (c.region_a == c.region_b)
      throw ParseFailure(ErrorCode::SelfPairedCrossing, lineno, "crossing joins a region to itself");
    d.crossings.push_back(c);
  }
  if (!have_header) throw ParseFailure(ErrorCode::ParseError, lineno, "missing 'regions N' header");
  return d;
}

/// Pre-matrix g_ij = -sum eta over crossings between regions i and j (i != j),
/// g_ii = -sum_{j != i} g_ij; region 0's row and column are then deleted.
inline SymMatrix goeritz_matrix(const Diagram& d) {
  if (d.region_count < 1) throw Error(ErrorCode::RegionOutOfRange, "a diagram needs at least one region");
  const std::size_t n = d.region_count;
  std::vector<std::vector<long long>> pre(n, std::vector<long long>(n, 0));
  for (const auto& c : d.crossings) {
    if (c.region_a >= n || c.region_b >= n) throw Error(ErrorCode::RegionOutOfRange, "region label out of range");
    if (c.region_a == c.region_b) throw Error(ErrorCode::SelfPairedCrossing, "crossing joins a region to itself");
    pre[c.region_a][c.region_b] -= c.eta;
    pre[c.region_b][c.region_a] -= c.eta;
  }
  for (std::size_t i = 0; i < n; ++i) {
    long long off = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off += pre[i][j];
    pre[i][i] = -off;
  }
  SymMatrix g(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g.set(i - 1, j - 1, Rational(static_cast<long>(pre[i][j])));
  return g;
}

}  // namespace kink
