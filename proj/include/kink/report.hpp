#pragma once

// Blow-up arithmetic for unimodular forms: with (n+, n-) the inertia counts,
// G ⊕ (-I_{4n+}) is congruent to (negative definite) ⊕ I_{n+} and
// G ⊕ I_{4n-} is congruent to (positive definite) ⊕ (-I_{n-}). Each claim is
// backed by a reduction trace, embedded in the report between
// "[trace <side>]" and "[/trace]" lines.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kink/error.hpp"
#include "kink/io.hpp"
#include "kink/linalg.hpp"
#include "kink/matrix.hpp"
#include "kink/moves.hpp"
#include "kink/reducer.hpp"

namespace kink {

struct BlowupReport {
  Inertia inertia;
  /// G ⊕ -I_{4n+} ≅ A- ⊕ I_{n+}
  std::size_t negative_blowups = 0;
  std::size_t negative_side_positive = 0;
  /// G ⊕ I_{4n-} ≅ A+ ⊕ -I_{n-}
  std::size_t positive_blowups = 0;
  std::size_t positive_side_negative = 0;
  Trace to_negative;
  Trace to_positive;
  std::string text;
};

namespace detail {

inline std::string side_summary(const char* label, std::size_t blowups, std::size_t kinks, std::size_t unkinks,
                                const Trace& t) {
  std::string s;
  s += std::string(label) + " blow-ups: " + std::to_string(blowups) + "\n";
  s += std::string(label) + " trace: " + std::to_string(kinks) + " kinks, " + std::to_string(unkinks) +
       " unkinks, end matrix size " + std::to_string(t.end.size()) + "\n";
  return s;
}

}  // namespace detail

inline BlowupReport blowup_report(const SymMatrix& g) {
  if (!g.is_integral()) throw Error(ErrorCode::NotIntegral, "blow-up report needs an integer matrix");
  const Rational det = determinant(g);
  if (det != 1 && det != -1) throw Error(ErrorCode::NotUnimodularForm, "determinant is " + det.get_str() + ", not +-1");

  BlowupReport r;
  r.inertia = inertia(g);
  r.negative_blowups = 4 * r.inertia.n_plus;
  r.negative_side_positive = r.inertia.n_plus;
  r.positive_blowups = 4 * r.inertia.n_minus;
  r.positive_side_negative = r.inertia.n_minus;
  r.to_negative = reduce(g, Target::NegDefinite);
  r.to_positive = reduce(g, Target::PosDefinite);
  const TraceStats neg = count_moves(r.to_negative.moves);
  const TraceStats pos = count_moves(r.to_positive.moves);

  std::string& s = r.text;
  s += "blow-up report\n";
  s += format_matrix(g);
  s += "n_plus: " + std::to_string(r.inertia.n_plus) + "\n";
  s += "n_minus: " + std::to_string(r.inertia.n_minus) + "\n";
  s += "signature: " + std::to_string(r.inertia.signature()) + "\n";
  s += "claim: G + (-I_" + std::to_string(r.negative_blowups) + ") ~ (negative definite) + I_" +
       std::to_string(r.negative_side_positive) + "\n";
  s += detail::side_summary("negative", r.negative_blowups, neg.neg_kinks, neg.pos_unkinks, r.to_negative);
  s += "claim: G + I_" + std::to_string(r.positive_blowups) + " ~ (positive definite) + (-I_" +
       std::to_string(r.positive_side_negative) + ")\n";
  s += detail::side_summary("positive", r.positive_blowups, pos.pos_kinks, pos.neg_unkinks, r.to_positive);
  s += "[trace negative]\n" + format_trace(r.to_negative) + "[/trace]\n";
  s += "[trace positive]\n" + format_trace(r.to_positive) + "[/trace]\n";
  return r;
}

/// Traces embedded in a report, in order of appearance.
inline std::vector<Trace> extract_report_traces(std::string_view report) {
  std::vector<Trace> out;
  std::size_t pos = 0;
  for (;;) {
    const auto open = report.find("[trace ", pos);
    if (open == std::string_view::npos) break;
    const auto body = report.find('\n', open);
    const auto close = report.find("[/trace]", body);
    if (body == std::string_view::npos || close == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "unterminated trace block in report");
    out.push_back(parse_trace(report.substr(body + 1, close - body - 1)));
    pos = close + 8;
  }
  return out;
}

}  // namespace kink
