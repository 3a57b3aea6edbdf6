#include "commands.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "cliffsyl/center_search.hpp"
#include "cliffsyl/inversion.hpp"
#include "cliffsyl/literal.hpp"
#include "cliffsyl/sylvester.hpp"
#include "cliffsyl/table1.hpp"
#include "json_io.hpp"

namespace cliffsyl::cli {

namespace {

struct CommonFlags {
  bool json = false;
};

struct SolveFlags {
  std::string algebra, a, b, c;
  std::string method = "auto";
  std::string scalar = "rational";
  std::optional<double> tolerance;
};

struct InverseFlags {
  std::string algebra, a;
  std::string scalar = "rational";
  std::optional<double> tolerance;
};

struct SearchFlags {
  std::optional<int> n;
  std::optional<std::string> signature;
  std::size_t samples = 50;
  unsigned threads = 0;
  std::uint64_t seed = SearchOptions{}.seed;
};

struct Table1Flags {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

// "P,Q"
Signature parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--algebra", "expected P,Q, got '" + text + "'");
  try {
    std::size_t used_p = 0, used_q = 0;
    const int p = std::stoi(text.substr(0, comma), &used_p);
    const int q = std::stoi(text.substr(comma + 1), &used_q);
    if (used_p != comma || used_q != text.size() - comma - 1) throw std::invalid_argument(text);
    return Signature(p, q);
  } catch (const InvalidSignature&) {
    throw;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--algebra", "expected P,Q, got '" + text + "'");
  }
}

MethodPolicy parse_policy(const std::string& m) {
  if (m == "auto") return MethodPolicy::Auto;
  if (m == "a") return MethodPolicy::FormulaAOnly;
  if (m == "b") return MethodPolicy::FormulaBOnly;
  if (m == "oracle") return MethodPolicy::OracleOnly;
  throw CLI::ValidationError("--method", "expected auto|a|b|oracle");
}

// Reports errors in the requested format and maps them to exit codes.
class Reporter {
 public:
  Reporter(bool json, std::ostream& out, std::ostream& err) : json_(json), out_(out), err_(err) {}

  int fail(int code, const std::string& kind, const std::string& message,
           std::optional<std::size_t> position = {}) const {
    if (json_)
      out_ << error_to_json(kind, message, position).dump(2) << "\n";
    else
      err_ << "error (" << kind << "): " << message << "\n";
    return code;
  }

 private:
  bool json_;
  std::ostream& out_;
  std::ostream& err_;
};

template <class T>
int do_solve(const SolveFlags& f, bool json_mode, std::ostream& out) {
  const Signature sig = parse_pair(f.algebra);
  const auto a = parse_multivector<T>(f.a, sig);
  const auto b = parse_multivector<T>(f.b, sig);
  const auto c = parse_multivector<T>(f.c, sig);
  SolveOptions opts;
  if (f.tolerance) opts.inverse.tolerance = *f.tolerance;
  const auto outcome = solve(a, b, c, parse_policy(f.method), opts);

  if (json_mode) {
    out << solve_outcome_to_json(outcome, sig).dump(2) << "\n";
  } else {
    out << "algebra: " << sig.to_string() << "\n"
        << "scalar: " << ScalarTraits<T>::name() << "\n"
        << "status: " << solve_status_name(outcome) << "\n"
        << "method: " << to_string(outcome.method) << "\n";
    if (outcome.solution) out << "x = " << format_multivector(*outcome.solution) << "\n";
    if (outcome.denominator) out << "denominator = " << format_multivector(*outcome.denominator) << "\n";
    if (outcome.oracle)
      out << "oracle: " << to_string(outcome.oracle->status) << ", rank " << outcome.oracle->rank << ", nullity "
          << outcome.oracle->nullity << "\n";
  }
  return outcome.status == SolveStatus::Unique ? kExitOk : kExitMath;
}

template <class T>
int do_inverse(const InverseFlags& f, bool json_mode, std::ostream& out) {
  const Signature sig = parse_pair(f.algebra);
  const auto a = parse_multivector<T>(f.a, sig);
  InverseOptions opts;
  if (f.tolerance) opts.tolerance = *f.tolerance;
  std::optional<Multivector<T>> inv;
  std::string reason;
  try {
    inv = inverse(a, opts);
  } catch (const NonInvertible& e) {
    reason = e.what();
  }
  if (json_mode) {
    json j = {{"algebra", signature_to_json(sig)},
              {"scalar", ScalarTraits<T>::name()},
              {"status", inv ? "invertible" : "non_invertible"},
              {"inverse", inv ? multivector_to_json(*inv) : json(nullptr)}};
    if (!inv) j["reason"] = reason;
    out << j.dump(2) << "\n";
  } else if (inv) {
    out << "inverse = " << format_multivector(*inv) << "\n";
  } else {
    out << "NonInvertible: " << reason << "\n";
  }
  return inv ? kExitOk : kExitMath;
}

int do_center_search(const SearchFlags& f, bool json_mode, std::ostream& out) {
  std::vector<Signature> sigs;
  if (f.signature) {
    const Signature sig = parse_pair(*f.signature);
    if (f.n && *f.n != sig.n())
      throw CLI::ValidationError("--signature", "p+q does not match --n " + std::to_string(*f.n));
    sigs.push_back(sig);
  } else if (f.n) {
    if (*f.n < 1 || *f.n > kMaxDimension)
      throw CLI::ValidationError("--n", "expected 1.." + std::to_string(kMaxDimension));
    sigs = Signature::all_of_dimension(*f.n);
  } else {
    throw CLI::ValidationError("center-search", "one of --n or --signature is required");
  }

  SearchOptions opts;
  opts.samples = f.samples;
  opts.threads = f.threads;
  opts.seed = f.seed;

  bool agrees = true;
  json reports = json::array();
  for (const auto& sig : sigs) {
    const SearchReport report = search(sig, opts);
    agrees = agrees && report.sampling_agrees;
    if (json_mode) {
      reports.push_back(search_report_to_json(report));
      continue;
    }
    auto list = [](const std::vector<GradeNegationMap>& ms) {
      if (ms.empty()) return std::string("none");
      std::string s;
      for (const auto& m : ms) s += (s.empty() ? "" : " ") + m.to_string();
      return s;
    };
    out << sig.to_string() << ": " << report.candidates_total << " candidates\n"
        << "  a+sigma(a) central:       " << list(report.cen1_only) << "\n"
        << "  a*sigma(a) central:       " << list(report.cen2_holds) << "\n"
        << "  both centers:             " << list(report.both_centers) << "\n";
    if (opts.samples > 0)
      out << "  sampling (" << opts.samples << " per candidate): "
          << (report.sampling_agrees ? "agrees" : "DISAGREES") << "\n";
  }
  if (json_mode)
    out << json{{"restriction", kSearchRestriction}, {"reports", std::move(reports)}}.dump(2) << "\n";
  else
    out << "note: " << kSearchRestriction << "\n";
  return agrees ? kExitOk : kExitMath;
}

int do_verify_table1(const Table1Flags& f, bool json_mode, std::ostream& out) {
  const auto results = verify_table1(f.samples, f.seed);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    if (json_mode) {
      rows.push_back(table1_result_to_json(r));
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << r.sig.to_string() << "  samples=" << r.samples
          << " cen1_mismatches=" << r.cen1_mismatches << " cen2_mismatches=" << r.cen2_mismatches
          << " non_central=" << r.non_central << "\n";
    }
  }
  if (json_mode) out << json{{"rows", std::move(rows)}, {"passed", all}}.dump(2) << "\n";
  return all ? kExitOk : kExitMath;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coordinate-free Sylvester equation solver for Clifford algebras Cl(p,q), p+q <= 3"};
  app.name("cliffsyl");
  app.require_subcommand(1);

  CommonFlags common;
  SolveFlags solve_flags;
  InverseFlags inverse_flags;
  SearchFlags search_flags;
  Table1Flags table1_flags;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a x + x b = c");
  solve_cmd->add_option("--algebra", solve_flags.algebra, "Signature P,Q")->required();
  solve_cmd->add_option("--a", solve_flags.a, "Left coefficient")->required();
  solve_cmd->add_option("--b", solve_flags.b, "Right coefficient")->required();
  solve_cmd->add_option("--c", solve_flags.c, "Right-hand side")->required();
  solve_cmd->add_option("--method", solve_flags.method, "auto|a|b|oracle")
      ->check(CLI::IsMember({"auto", "a", "b", "oracle"}));
  solve_cmd->add_option("--scalar", solve_flags.scalar, "rational|float")
      ->check(CLI::IsMember({"rational", "float"}));
  solve_cmd->add_option("--tolerance", solve_flags.tolerance, "Float-mode singularity tolerance");
  solve_cmd->add_flag("--json", common.json, "JSON output");

  auto* inverse_cmd = app.add_subcommand("inverse", "Closed-form multivector inverse (n <= 3)");
  inverse_cmd->add_option("--algebra", inverse_flags.algebra, "Signature P,Q")->required();
  inverse_cmd->add_option("--a", inverse_flags.a, "Multivector to invert")->required();
  inverse_cmd->add_option("--scalar", inverse_flags.scalar, "rational|float")
      ->check(CLI::IsMember({"rational", "float"}));
  inverse_cmd->add_option("--tolerance", inverse_flags.tolerance, "Float-mode singularity tolerance");
  inverse_cmd->add_flag("--json", common.json, "JSON output");

  auto* search_cmd = app.add_subcommand("center-search", "Search grade negations for algebra centers");
  search_cmd->add_option("--n", search_flags.n, "Dimension p+q (all signatures)");
  search_cmd->add_option("--signature", search_flags.signature, "Single signature P,Q");
  search_cmd->add_option("--samples", search_flags.samples, "Random cross-checks per candidate (0 disables)");
  search_cmd->add_option("--threads", search_flags.threads, "Worker threads (0 = hardware)");
  search_cmd->add_option("--seed", search_flags.seed, "Sampling seed");
  search_cmd->add_flag("--json", common.json, "JSON output");

  auto* table1_cmd = app.add_subcommand("verify-table1", "Check the seven-algebra center table");
  table1_cmd->add_option("--samples", table1_flags.samples, "Random multivectors per row");
  table1_cmd->add_option("--seed", table1_flags.seed, "Sampling seed");
  table1_cmd->add_flag("--json", common.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out, msg_err;
    const int code = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Reporter report(common.json, out, err);
  try {
    if (solve_cmd->parsed())
      return solve_flags.scalar == "float" ? do_solve<double>(solve_flags, common.json, out)
                                           : do_solve<Rational>(solve_flags, common.json, out);
    if (inverse_cmd->parsed())
      return inverse_flags.scalar == "float" ? do_inverse<double>(inverse_flags, common.json, out)
                                             : do_inverse<Rational>(inverse_flags, common.json, out);
    if (search_cmd->parsed()) return do_center_search(search_flags, common.json, out);
    if (table1_cmd->parsed()) return do_verify_table1(table1_flags, common.json, out);
  } catch (const ParseError& e) {
    return report.fail(kExitUsage, "parse_error", e.what(), e.position());
  } catch (const CLI::ValidationError& e) {
    return report.fail(kExitUsage, "usage", e.what());
  } catch (const InvalidSignature& e) {
    return report.fail(kExitUsage, "invalid_signature", e.what());
  } catch (const UnsupportedDimension& e) {
    return report.fail(kExitUsage, "unsupported_dimension", e.what());
  } catch (const NonInvertible& e) {
    return report.fail(kExitMath, "non_invertible", e.what());
  } catch (const InternalInvariantViolation& e) {
    return report.fail(kExitMath, "internal_invariant_violation", e.what());
  }
  return kExitUsage;
}

}  // namespace cliffsyl::cli
