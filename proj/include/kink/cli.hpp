#pragma once

// Command-line front end. Exit codes: 0 success / valid certificate,
// 1 invalid certificate, 2 usage, parse or input error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kink/cct.hpp"
#include "kink/error.hpp"
#include "kink/goeritz.hpp"
#include "kink/io.hpp"
#include "kink/linalg.hpp"
#include "kink/moves.hpp"
#include "kink/qform.hpp"
#include "kink/reducer.hpp"
#include "kink/report.hpp"

namespace kink::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

inline Target parse_target(const std::string& s) {
  if (s == "neg") return Target::NegDefinite;
  if (s == "pos") return Target::PosDefinite;
  if (s == "neg-semi") return Target::NegSemidefinite;
  if (s == "pos-semi") return Target::PosSemidefinite;
  throw Error(ErrorCode::ParseError, "unknown target '" + s + "'");
}

inline std::string format_stats(const TraceStats& s) {
  std::ostringstream o;
  o << "pos_kinks: " << s.pos_kinks << "\n"
    << "neg_kinks: " << s.neg_kinks << "\n"
    << "pos_unkinks: " << s.pos_unkinks << "\n"
    << "neg_unkinks: " << s.neg_unkinks << "\n"
    << "congruences: " << s.congruences << "\n";
  return o.str();
}

inline std::string format_report(const std::string& name, const Trace& t, const VerificationReport& rep,
                                 bool audit) {
  std::ostringstream o;
  if (rep.valid)
    o << name << ": valid (" << t.moves.size() << " moves, end size " << t.end.size() << ")\n";
  else
    o << name << ": invalid at step " << *rep.failed_step << ": " << rep.message << "\n";
  if (audit)
    for (std::size_t i = 0; i < rep.audit.size(); ++i) {
      const auto& a = rep.audit[i];
      o << "  step " << i << ": size " << a.size << ", inertia " << a.inertia.n_plus << " " << a.inertia.n_minus
        << " " << a.inertia.n_zero << ", |det| " << a.abs_det.get_str() << "\n";
    }
  return o.str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kink-equivalence of symmetric integer and rational matrices", "kinkctl"};
  app.require_subcommand(1);

  std::string file;
  std::string target = "neg";
  std::string out_path;
  std::vector<std::string> trace_files;
  bool audit = false;
  std::string k_text;
  std::string expr;

  auto* inertia_cmd = app.add_subcommand("inertia", "Eigenvalue sign counts n+ n- n0");
  inertia_cmd->add_option("FILE", file, "matrix file")->required();
  auto* det_cmd = app.add_subcommand("det", "Exact determinant");
  det_cmd->add_option("FILE", file, "matrix file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Trace to a (semi)definite representative");
  reduce_cmd->add_option("FILE", file, "matrix file")->required();
  reduce_cmd->add_option("--target", target, "pos | neg | pos-semi | neg-semi")
      ->check(CLI::IsMember({"pos", "neg", "pos-semi", "neg-semi"}));
  reduce_cmd->add_option("--out", out_path, "write the trace here and print the end matrix");

  auto* verify_cmd = app.add_subcommand("verify", "Replay and check trace certificates");
  verify_cmd->add_option("TRACE", trace_files, "trace files")->required();
  verify_cmd->add_flag("--audit", audit, "print per-step inertia and |det|");

  auto* stats_cmd = app.add_subcommand("stats", "Move counts of a valid trace");
  stats_cmd->add_option("TRACE", file, "trace file")->required();

  auto* squares_cmd = app.add_subcommand("foursquares", "Lexicographically greatest a>=b>=c>=d with sum of squares K");
  squares_cmd->add_option("K", k_text, "nonnegative integer")->required();

  auto* cct_cmd = app.add_subcommand("cct", "Integer Gram factors");
  cct_cmd->require_subcommand(1);
  auto* search_cmd = cct_cmd->add_subcommand("search", "Exhaustive search for C with C C^T = G");
  search_cmd->add_option("FILE", file, "matrix file")->required();
  auto* icct_cmd = cct_cmd->add_subcommand("icct", "Trace from I + C C^T to -(I + C^T C)");
  icct_cmd->add_option("CFILE", file, "integer matrix file (mat R C)")->required();
  auto* reduce2_cmd = cct_cmd->add_subcommand("reduce2", "Reduced form of a positive-definite 2x2 matrix");
  reduce2_cmd->add_option("FILE", file, "matrix file")->required();

  auto* goeritz_cmd = app.add_subcommand("goeritz", "Goeritz matrix of a diagram file");
  goeritz_cmd->add_option("FILE", file, "diagram file")->required();

  auto* qform_cmd = app.add_subcommand("qform", "Gram matrix of a quadratic form");
  qform_cmd->add_option("EXPR", expr, "e.g. '5*x1^2 + 6*x1*x2 + 6*x2^2'")->required();

  auto* report_cmd = app.add_subcommand("report", "Arithmetic reports");
  report_cmd->require_subcommand(1);
  auto* blowup_cmd = report_cmd->add_subcommand("blowup", "Blow-up counts for a unimodular form");
  blowup_cmd->add_option("FILE", file, "matrix file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*inertia_cmd) {
      const Inertia in = inertia(parse_matrix(read_file(file)));
      out << in.n_plus << " " << in.n_minus << " " << in.n_zero << "\n";
    } else if (*det_cmd) {
      out << determinant(parse_matrix(read_file(file))).get_str() << "\n";
    } else if (*reduce_cmd) {
      const Trace t = reduce(parse_matrix(read_file(file)), parse_target(target));
      if (out_path.empty()) {
        out << format_trace(t);
      } else {
        write_file(out_path, format_trace(t));
        out << format_matrix(t.end);
      }
    } else if (*verify_cmd) {
      std::vector<Trace> traces;
      for (const auto& f : trace_files) traces.push_back(parse_trace(read_file(f)));
      std::vector<std::future<VerificationReport>> jobs;
      for (const auto& t : traces) jobs.push_back(std::async(std::launch::async, [&t] { return verify_trace(t); }));
      bool all_valid = true;
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        const VerificationReport rep = jobs[i].get();
        all_valid = all_valid && rep.valid;
        out << format_report(trace_files[i], traces[i], rep, audit);
      }
      return all_valid ? kOk : kInvalid;
    } else if (*stats_cmd) {
      const Trace t = parse_trace(read_file(file));
      const VerificationReport rep = verify_trace(t);
      if (!rep.valid) {
        err << format_report(file, t, rep, false);
        return kInvalid;
      }
      out << format_stats(count_moves(t.moves));
    } else if (*squares_cmd) {
      const auto s = four_squares(parse_integer(k_text));
      out << s[0].get_str() << " " << s[1].get_str() << " " << s[2].get_str() << " " << s[3].get_str() << "\n";
    } else if (*search_cmd) {
      const auto c = cct_search(parse_matrix(read_file(file)));
      out << (c ? format_int_matrix(c->c) : std::string("NONE\n"));
    } else if (*icct_cmd) {
      out << format_trace(icct_trace(parse_int_matrix(read_file(file))));
    } else if (*reduce2_cmd) {
      const auto [reduced, e] = reduce_binary_form(parse_matrix(read_file(file)));
      out << format_matrix(reduced) << format_int_matrix(e);
    } else if (*goeritz_cmd) {
      out << format_matrix(goeritz_matrix(parse_diagram(read_file(file))));
    } else if (*qform_cmd) {
      out << format_matrix(parse_quadratic_form(expr));
    } else if (*blowup_cmd) {
      out << blowup_report(parse_matrix(read_file(file))).text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace kink::cli
