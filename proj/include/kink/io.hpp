#pragma once

// Text formats.
//
// Matrix file:      "sym N" followed by N rows of N rationals ("p" or "p/q").
// Integer matrix:   "mat R C" followed by R rows of C integers.
// Inline matrix:    rows separated by ';', entries by whitespace; the empty
//                   matrix is written "empty".
// Trace file:       "trace", the start matrix inline, one move per line
//                   ("congr <inline>", "kink +1|-1", "unkink +1|-1"), and
//                   finally "end <inline>".
//
// '#' starts a comment in every format. Output is always exact.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kink/error.hpp"
#include "kink/goeritz.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"

namespace kink {

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-empty lines with comments stripped.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    std::string s = strip_comment(raw);
    if (!s.empty()) out.push_back({n, std::move(s)});
  }
  return out;
}

}  // namespace detail

/// "p" or "p/q" with optional sign on p and q > 0.
inline Rational parse_rational(std::string_view tok) {
  std::string_view num = tok;
  std::string_view den = "1";
  if (const auto slash = tok.find('/'); slash != std::string_view::npos) {
    num = tok.substr(0, slash);
    den = tok.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!detail::all_digits(digits) || !detail::all_digits(den))
    throw Error(ErrorCode::BadRational, "malformed number '" + std::string(tok) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer p(n, 10);
  const Integer q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::BadRational, "zero denominator in '" + std::string(tok) + "'");
  return make_rational(p, q);
}

inline Integer parse_integer(std::string_view tok) {
  const Rational q = parse_rational(tok);
  if (!is_integer(q)) throw Error(ErrorCode::BadRational, "expected an integer, got '" + std::string(tok) + "'");
  return q.get_num();
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// "sym N" block, one row per line, entries separated by single spaces.
inline std::string format_matrix(const SymMatrix& g) {
  std::string out = "sym " + std::to_string(g.size()) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j) out += ' ';
      out += format_rational(g(i, j));
    }
    out += '\n';
  }
  return out;
}

inline SymMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseFailure(ErrorCode::ParseError, 1, "empty matrix file");
  const auto head = detail::split_ws(lines[0].text);
  if (head.size() != 2 || head[0] != "sym" || !detail::all_digits(head[1]))
    throw ParseFailure(ErrorCode::ParseError, lines[0].number, "expected 'sym N'");
  const std::size_t n = std::stoul(head[1]);
  if (lines.size() != n + 1)
    throw ParseFailure(ErrorCode::ParseError, lines.back().number,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    const auto tok = detail::split_ws(line.text);
    if (tok.size() != n)
      throw ParseFailure(ErrorCode::ParseError, line.number,
                         "expected " + std::to_string(n) + " entries, found " + std::to_string(tok.size()));
    RatVector row;
    for (const auto& t : tok) {
      try {
        row.push_back(parse_rational(t));
      } catch (const Error& e) {
        throw ParseFailure(e.code(), line.number, e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return SymMatrix::from_rows(rows);
}

inline std::string format_int_matrix(const IntMatrix& m) {
  std::string out = "mat " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  if (m.cols() == 0) return out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

/// "mat R C" then R rows of C integers; with C = 0 no rows follow.
inline IntMatrix parse_int_matrix(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseFailure(ErrorCode::ParseError, 1, "empty matrix file");
  const auto head = detail::split_ws(lines[0].text);
  if (head.size() != 3 || head[0] != "mat" || !detail::all_digits(head[1]) || !detail::all_digits(head[2]))
    throw ParseFailure(ErrorCode::ParseError, lines[0].number, "expected 'mat R C'");
  const std::size_t r = std::stoul(head[1]);
  const std::size_t c = std::stoul(head[2]);
  const std::size_t expected = c == 0 ? 0 : r;
  if (lines.size() != expected + 1)
    throw ParseFailure(ErrorCode::ParseError, lines.back().number, "expected " + std::to_string(expected) + " rows");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < expected; ++i) {
    const auto& line = lines[i + 1];
    const auto tok = detail::split_ws(line.text);
    if (tok.size() != c) throw ParseFailure(ErrorCode::ParseError, line.number, "wrong number of entries");
    for (std::size_t j = 0; j < c; ++j) {
      try {
        m(i, j) = parse_integer(tok[j]);
      } catch (const Error& e) {
        throw ParseFailure(e.code(), line.number, e.what());
      }
    }
  }
  return m;
}

namespace detail {

template <typename Format>
std::string format_inline(std::size_t rows, std::size_t cols, Format&& entry) {
  if (rows == 0) return "empty";
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += ' ';
      out += entry(i, j);
    }
  }
  return out;
}

inline std::vector<std::vector<std::string>> split_inline(std::string_view s) {
  std::vector<std::vector<std::string>> rows;
  const auto toks = split_ws(s);
  if (toks.size() == 1 && toks[0] == "empty") return rows;
  std::string buf(s);
  std::size_t start = 0;
  for (;;) {
    const auto semi = buf.find(';', start);
    rows.push_back(split_ws(std::string_view(buf).substr(start, semi == std::string::npos ? semi : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return rows;
}

}  // namespace detail

inline std::string format_inline(const SymMatrix& g) {
  return detail::format_inline(g.size(), g.size(),
                               [&](std::size_t i, std::size_t j) { return format_rational(g(i, j)); });
}

inline std::string format_inline(const IntMatrix& m) {
  return detail::format_inline(m.rows(), m.cols(),
                               [&](std::size_t i, std::size_t j) { return m(i, j).get_str(); });
}

inline SymMatrix parse_inline_sym(std::string_view s) {
  std::vector<RatVector> rows;
  for (const auto& r : detail::split_inline(s)) {
    RatVector row;
    for (const auto& t : r) row.push_back(parse_rational(t));
    rows.push_back(std::move(row));
  }
  return SymMatrix::from_rows(rows);
}

inline IntMatrix parse_inline_int(std::string_view s) {
  std::vector<IntVector> rows;
  for (const auto& r : detail::split_inline(s)) {
    IntVector row;
    for (const auto& t : r) row.push_back(parse_integer(t));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

inline std::string format_move(const Move& m) {
  if (const auto* c = std::get_if<Congruence>(&m)) return "congr " + format_inline(c->p);
  if (const auto* k = std::get_if<Kink>(&m)) return k->sign > 0 ? "kink +1" : "kink -1";
  return std::get<Unkink>(m).sign > 0 ? "unkink +1" : "unkink -1";
}

inline std::string format_trace(const Trace& t) {
  std::string out = "trace\n" + format_inline(t.start) + "\n";
  for (const auto& m : t.moves) out += format_move(m) + "\n";
  out += "end " + format_inline(t.end) + "\n";
  return out;
}

inline Trace parse_trace(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.size() < 3 || lines[0].text != "trace")
    throw ParseFailure(ErrorCode::ParseError, lines.empty() ? 1 : lines[0].number,
                       "expected 'trace', start matrix, moves and 'end' line");
  Trace t;
  auto wrap = [](const detail::Line& line, auto&& fn) {
    try {
      return fn();
    } catch (const ParseFailure&) {
      throw;
    } catch (const Error& e) {
      throw ParseFailure(e.code() == ErrorCode::SizeMismatch ? ErrorCode::ParseError : e.code(), line.number,
                         e.what());
    }
  };
  t.start = wrap(lines[1], [&] { return parse_inline_sym(lines[1].text); });

  auto sign_of = [](const detail::Line& line, const std::string& tok) {
    if (tok == "+1") return 1;
    if (tok == "-1") return -1;
    throw ParseFailure(ErrorCode::ParseError, line.number, "sign must be +1 or -1");
  };

  for (std::size_t i = 2; i + 1 < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto sp = line.text.find_first_of(" \t");
    const std::string word = line.text.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : line.text.substr(sp + 1);
    if (word == "congr") {
      t.moves.emplace_back(Congruence{wrap(line, [&] { return parse_inline_int(rest); })});
    } else if (word == "kink" || word == "unkink") {
      const auto tok = detail::split_ws(rest);
      if (tok.size() != 1) throw ParseFailure(ErrorCode::ParseError, line.number, "expected a single sign");
      const int s = sign_of(line, tok[0]);
      if (word == "kink")
        t.moves.emplace_back(Kink{s});
      else
        t.moves.emplace_back(Unkink{s});
    } else {
      throw ParseFailure(ErrorCode::ParseError, line.number, "unknown move '" + word + "'");
    }
  }

  const auto& last = lines.back();
  if (last.text.rfind("end", 0) != 0 || (last.text.size() > 3 && last.text[3] != ' ' && last.text[3] != '\t'))
    throw ParseFailure(ErrorCode::ParseError, last.number, "expected 'end <matrix>'");
  t.end = wrap(last, [&] { return parse_inline_sym(last.text.substr(3)); });
  return t;
}

}  // namespace kink
