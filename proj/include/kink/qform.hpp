#pragma once

// Quadratic forms q(x) = x^T A x written as sums of monomials, e.g.
//   5*x1^2 + 6*x1*x2 - 3/2*x2^2
// Coefficients are rationals; variables are x1, x2, ...; every monomial must
// have degree exactly 2. A cross term c*xi*xj contributes c/2 to A_ij and A_ji.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kink/error.hpp"
#include "kink/io.hpp"
#include "kink/matrix.hpp"

namespace kink {

namespace detail {

class QuadraticFormParser {
 public:
  explicit QuadraticFormParser(std::string_view text) : s_(text) {}

  SymMatrix parse() {
    skip_space();
    if (at_end()) fail(ErrorCode::ParseError, "empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail(ErrorCode::ParseError, "expected '+' or '-'");
      }
      term(sign);
      first = false;
      skip_space();
    }

    std::size_t n = 0;
    for (const auto& [key, c] : coeff_) n = std::max(n, key.second);
    SymMatrix a(n);
    for (const auto& [key, c] : coeff_) {
      const auto [i, j] = key;
      if (i == j)
        a.set(i - 1, i - 1, a(i - 1, i - 1) + c);
      else
        a.set(i - 1, j - 1, a(i - 1, j - 1) + c / 2);
    }
    return a;
  }

 private:
  void term(int sign) {
    Rational coeff = sign;
    std::vector<std::size_t> vars;
    for (;;) {
      skip_space();
      if (at_end()) fail(ErrorCode::ParseError, "expected a number or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t v = variable();
        std::size_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          const std::size_t start = pos_;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
          if (start == pos_) fail(ErrorCode::ParseError, "expected an exponent");
          const std::string_view e = s_.substr(start, pos_ - start);
          power = e.size() > 2 ? 100 : std::stoul(std::string(e));
        }
        if (power == 0 || vars.size() + power > 2) fail(ErrorCode::DegreeError, "monomial is not of degree 2");
        vars.insert(vars.end(), power, v);
      } else {
        fail(ErrorCode::ParseError, std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      if (!at_end() && peek() != '+' && peek() != '-') fail(ErrorCode::ParseError, "expected '*', '+' or '-'");
      break;
    }
    if (vars.size() != 2) fail(ErrorCode::DegreeError, "monomial is not of degree 2");
    auto key = std::minmax(vars[0], vars[1]);
    coeff_[{key.first, key.second}] += coeff;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail(e.code(), e.what());
    }
  }

  std::size_t variable() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name.size() < 2 || name[0] != 'x' || !all_digits(name.substr(1)) || name[1] == '0')
      fail(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    if (name.size() > 9) fail(ErrorCode::UnknownVariable, "variable index too large");
    return std::stoul(std::string(name.substr(1)));
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeff_;
};

}  // namespace detail

/// Gram matrix of a quadratic form; odd cross coefficients give half-integers.
inline SymMatrix parse_quadratic_form(std::string_view text) { return detail::QuadraticFormParser(text).parse(); }

}  // namespace kink
