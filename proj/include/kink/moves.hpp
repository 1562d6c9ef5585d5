#pragma once

// The kink-equivalence move model: unimodular congruence G -> P G P^T,
// kinking G -> G ⊕ [eps] and unkinking G ⊕ [eps] -> G, together with a
// replaying verifier for recorded move sequences.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kink/error.hpp"
#include "kink/linalg.hpp"
#include "kink/matrix.hpp"

namespace kink {

struct Congruence {
  IntMatrix p;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct Kink {
  int sign = -1;  // +1 or -1
  friend bool operator==(const Kink&, const Kink&) = default;
};

/// Removes the trailing [sign] block; repositioning must be done by an
/// explicit permutation congruence beforehand.
struct Unkink {
  int sign = +1;
  friend bool operator==(const Unkink&, const Unkink&) = default;
};

using Move = std::variant<Congruence, Kink, Unkink>;

struct Trace {
  SymMatrix start;
  std::vector<Move> moves;
  SymMatrix end;

  friend bool operator==(const Trace&, const Trace&) = default;
};

namespace detail {
inline void check_sign(int s) {
  if (s != 1 && s != -1) throw Error(ErrorCode::ParseError, "kink sign must be +1 or -1");
}
}  // namespace detail

inline SymMatrix apply_move(const SymMatrix& g, const Move& m) {
  if (const auto* c = std::get_if<Congruence>(&m)) return congruence(g, c->p);
  if (const auto* k = std::get_if<Kink>(&m)) {
    detail::check_sign(k->sign);
    return g.direct_sum(Rational(k->sign));
  }
  const auto& u = std::get<Unkink>(m);
  detail::check_sign(u.sign);
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::UnkinkShapeViolation, "cannot unkink the empty matrix");
  if (g(n - 1, n - 1) != u.sign)
    throw Error(ErrorCode::UnkinkShapeViolation,
                "last diagonal entry is " + g(n - 1, n - 1).get_str() + ", expected " + std::to_string(u.sign));
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (g(n - 1, j) != 0)
      throw Error(ErrorCode::UnkinkShapeViolation, "last row has nonzero entry in column " + std::to_string(j));
  return g.leading(n - 1);
}

struct StepAudit {
  std::size_t size = 0;
  Inertia inertia;
  Rational abs_det;
};

struct VerificationReport {
  bool valid = false;
  /// Index into Trace::moves of the first failing move; equals moves.size()
  /// when every move applied but the final matrix does not match.
  std::optional<std::size_t> failed_step;
  std::optional<ErrorCode> reason;
  std::string message;
  /// audit[0] is the start matrix, audit[i + 1] the matrix after move i.
  std::vector<StepAudit> audit;
  /// Replayed matrix at the point verification stopped.
  SymMatrix reached;
};

/// Replays the moves of t from t.start and compares against t.end. Also checks
/// that nullity and |det| stay constant along the way. Never throws on a
/// well-formed trace; failures are reported.
inline VerificationReport verify_trace(const Trace& t) {
  VerificationReport rep;
  auto audit_of = [](const SymMatrix& g) {
    StepAudit a;
    a.size = g.size();
    a.inertia = inertia(g);
    a.abs_det = abs(determinant(g));
    return a;
  };

  SymMatrix cur = t.start;
  rep.audit.push_back(audit_of(cur));
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    try {
      cur = apply_move(cur, t.moves[i]);
    } catch (const Error& e) {
      rep.failed_step = i;
      rep.reason = e.code();
      rep.message = e.what();
      rep.reached = std::move(cur);
      return rep;
    }
    rep.audit.push_back(audit_of(cur));
    const StepAudit& before = rep.audit[rep.audit.size() - 2];
    const StepAudit& after = rep.audit.back();
    if (before.inertia.n_zero != after.inertia.n_zero || before.abs_det != after.abs_det) {
      rep.failed_step = i;
      rep.reason = ErrorCode::InvalidTrace;
      rep.message = "nullity or |det| changed at step " + std::to_string(i);
      rep.reached = std::move(cur);
      return rep;
    }
  }
  rep.reached = cur;
  if (!(cur == t.end)) {
    rep.failed_step = t.moves.size();
    rep.reason = ErrorCode::InvalidTrace;
    rep.message = "replayed matrix differs from the recorded end matrix";
    return rep;
  }
  rep.valid = true;
  return rep;
}

struct TraceStats {
  std::size_t pos_kinks = 0;
  std::size_t neg_kinks = 0;
  std::size_t pos_unkinks = 0;
  std::size_t neg_unkinks = 0;
  std::size_t congruences = 0;

  friend bool operator==(const TraceStats&, const TraceStats&) = default;
};

/// Move counts by kind. Counting without verification is available for
/// traces already known to be valid.
inline TraceStats count_moves(const std::vector<Move>& moves) {
  TraceStats s;
  for (const auto& m : moves) {
    if (std::holds_alternative<Congruence>(m)) {
      ++s.congruences;
    } else if (const auto* k = std::get_if<Kink>(&m)) {
      ++(k->sign > 0 ? s.pos_kinks : s.neg_kinks);
    } else {
      ++(std::get<Unkink>(m).sign > 0 ? s.pos_unkinks : s.neg_unkinks);
    }
  }
  return s;
}

inline TraceStats trace_stats(const Trace& t) {
  const VerificationReport rep = verify_trace(t);
  if (!rep.valid) throw Error(ErrorCode::InvalidTrace, rep.message);
  return count_moves(t.moves);
}

/// The trace for -G: same congruence matrices, kink/unkink signs flipped, both
/// endpoints negated. Uses P(-G)P^T = -(P G P^T) and (-G) ⊕ [e] = -(G ⊕ [-e]).
inline Trace negate_trace(const Trace& t) {
  Trace out{-t.start, {}, -t.end};
  out.moves.reserve(t.moves.size());
  for (const auto& m : t.moves) {
    if (const auto* k = std::get_if<Kink>(&m))
      out.moves.emplace_back(Kink{-k->sign});
    else if (const auto* u = std::get_if<Unkink>(&m))
      out.moves.emplace_back(Unkink{-u->sign});
    else
      out.moves.push_back(m);
  }
  return out;
}

}  // namespace kink
