// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. `--slow` adds the n = 5, 6 center search.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsyl/center_search.hpp"
#include "cliffsyl/inversion.hpp"
#include "cliffsyl/literal.hpp"
#include "cliffsyl/oracle.hpp"
#include "cliffsyl/random.hpp"
#include "cliffsyl/sylvester.hpp"
#include "cliffsyl/table1.hpp"
#include "commands.hpp"
#include "json_io.hpp"

namespace {

using namespace cliffsyl;
using MV = Multivector<Rational>;
using Clock = std::chrono::steady_clock;

MV mv(const Signature& sig, const char* text) { return parse_multivector<Rational>(text, sig); }

// Collects failed checks; a criterion passes iff nothing was recorded.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0 = no runtime bound
  std::function<void(Check&)> body;
};

std::vector<Signature> signatures(int lo, int hi) {
  std::vector<Signature> out;
  for (int n = lo; n <= hi; ++n)
    for (const auto& s : Signature::all_of_dimension(n)) out.push_back(s);
  return out;
}

void worked_example(Check& c) {
  const Signature sig(3, 0);
  const auto a = mv(sig, "3+3e1+2e13+5e123");
  const auto b = mv(sig, "3+2e2+3e3+2e123");
  const auto rhs = mv(sig, "5e1+3e2+4e13+e23");
  const Rational scale(1, 2177719);

  const auto b_bar = clifford_conjugate(b);
  c.expect(b_bar == mv(sig, "3-2e2-3e3+2e123"), "conj(b) = " + format_multivector(b_bar));

  const auto out = solve_formula_a(a, b, rhs);
  c.expect(out.status == SolveStatus::Unique, "formula A status");
  if (!out.denominator || !out.solution) return;
  const auto& d = *out.denominator;
  c.expect(d == mv(sig, "-21+36e1+28e2+24e13+42e23+84e123"), "denominator = " + format_multivector(d));

  const auto d_inv = inverse_n3(d);
  c.expect(d_inv == mv(sig, "-9807+14436e1+1708e2+9624e13+2562e23-20748e123") * scale,
           "denominator inverse = " + format_multivector(d_inv));

  const MV numerator = a * rhs + rhs * b_bar;
  c.expect(numerator == mv(sig, "1+11e1+43e2+4e3-3e12-12e13+32e23+5e123"),
           "numerator = " + format_multivector(numerator));

  const auto x = mv(sig, "359677+601305e1-155957e2-436078e3+209677e12+1076362e13-489350e23+27015e123") * scale;
  c.expect(*out.solution == x, "x = " + format_multivector(*out.solution));
  c.expect(MV(d_inv * numerator) == x, "x != inverse(denominator) * numerator");
  c.expect(MV(a * x + x * b) == rhs, "residual");
}

void mirror_formula(Check& c) {
  const Signature sig(3, 0);
  const auto a = mv(sig, "3+3e1+2e13+5e123");
  const auto b = mv(sig, "3+2e2+3e3+2e123");
  const auto rhs = mv(sig, "5e1+3e2+4e13+e23");
  const auto fa = solve_formula_a(a, b, rhs);
  const auto fb = solve_formula_b(a, b, rhs);
  c.expect(fb.status == SolveStatus::Unique && fb.method == SolveMethod::FormulaB, "formula B status");
  c.expect(fa.solution && fb.solution && *fa.solution == *fb.solution, "formula B solution differs");
  if (fb.denominator) c.detail = "B denominator " + format_multivector(*fb.denominator);
}

void residual_suite(Check& c) {
  std::size_t instances = 0, a_singular_oracle_unique = 0, b_singular_oracle_unique = 0,
              both_singular_oracle_unique = 0, a_b_disagree = 0, oracle_not_unique = 0, equal_coeff = 0;
  for (const auto& sig : signatures(2, 3)) {
    std::mt19937_64 rng(3000 + sig.p() * 10 + sig.q());
    for (int t = 0; t < 1000; ++t, ++instances) {
      const auto a = random_multivector(sig, rng, 9, 1);
      // Every tenth instance shares a and b so the equal-coefficient path runs.
      const auto b = t % 10 == 0 ? a : random_multivector(sig, rng, 9, 1);
      const auto rhs = random_multivector(sig, rng, 9, 1);
      const std::string where = sig.to_string() + " #" + std::to_string(t);

      std::vector<SolveOutcome<Rational>> outcomes{solve_formula_a(a, b, rhs), solve_formula_b(a, b, rhs)};
      if (a == b) {
        ++equal_coeff;
        try {
          outcomes.push_back(solve_equal_coeff(a, rhs));
        } catch (const NonInvertible&) {
        }
      }
      outcomes.push_back(solve(a, b, rhs, MethodPolicy::OracleOnly));
      outcomes.push_back(solve(a, b, rhs));
      const auto ref = oracle_solve(a, b, rhs);

      for (const auto& o : outcomes) {
        if (o.status != SolveStatus::Unique) continue;
        c.expect(MV(a * *o.solution + *o.solution * b) == rhs, where + " residual via " + to_string(o.method));
        c.expect(ref.status == OracleStatus::Unique && *o.solution == *ref.particular,
                 where + " disagrees with oracle via " + to_string(o.method));
      }
      const bool a_ok = outcomes[0].status == SolveStatus::Unique;
      const bool b_ok = outcomes[1].status == SolveStatus::Unique;
      const bool unique = ref.status == OracleStatus::Unique;
      if (!unique) ++oracle_not_unique;
      if (!a_ok && unique) ++a_singular_oracle_unique;
      if (!b_ok && unique) ++b_singular_oracle_unique;
      if (!a_ok && !b_ok && unique) ++both_singular_oracle_unique;
      if (a_ok != b_ok) ++a_b_disagree;
    }
  }
  std::ostringstream s;
  s << instances << " instances (" << equal_coeff << " with b = a); A singular & oracle unique: "
    << a_singular_oracle_unique << "; B singular & oracle unique: " << b_singular_oracle_unique
    << "; both singular & oracle unique: " << both_singular_oracle_unique << "; A/B verdicts differ: " << a_b_disagree
    << "; oracle not unique: " << oracle_not_unique;
  c.detail = s.str();
}

void table1(Check& c) {
  const auto rows = verify_table1(200, 4000);
  c.expect(rows.size() == 7, "expected 7 rows");
  for (const auto& r : rows) {
    c.expect(r.samples == 200, r.sig.to_string() + " sample count");
    c.expect(r.passed(), r.sig.to_string() + " cen1 mismatches " + std::to_string(r.cen1_mismatches) +
                             ", cen2 mismatches " + std::to_string(r.cen2_mismatches) + ", non-central " +
                             std::to_string(r.non_central));
  }
}

void singularity(Check& c) {
  const Signature sig(3, 0);
  const auto a = mv(sig, "e12");
  c.expect((a + clifford_conjugate(a)).is_zero(), "a + conj(a) should vanish");
  std::ostringstream s;
  for (const char* rhs_text : {"1", "e1", "2e3-e123"}) {
    const auto rhs = mv(sig, rhs_text);
    c.expect(solve_equal_coeff(a, rhs).status == SolveStatus::Singular, std::string("special case, c = ") + rhs_text);
    c.expect(solve_formula_a(a, a, rhs).status == SolveStatus::Singular, std::string("formula A, c = ") + rhs_text);
    c.expect(solve_formula_b(a, a, rhs).status == SolveStatus::Singular, std::string("formula B, c = ") + rhs_text);
    const auto out = solve(a, a, rhs);
    const auto ref = oracle_solve(a, a, rhs);
    c.expect(out.status == SolveStatus::SingularBothFormulas && out.method == SolveMethod::Oracle && out.oracle &&
                 out.oracle->status == ref.status && out.oracle->rank == ref.rank,
             std::string("auto fallback, c = ") + rhs_text);
    c.expect(ref.rank == 4 && ref.nullity == 4, std::string("rank, c = ") + rhs_text);
    if (ref.particular) c.expect(MV(a * *ref.particular + *ref.particular * a) == rhs, "oracle particular residual");
    s << "c=" << rhs_text << ": " << to_string(ref.status) << " rank " << ref.rank << "; ";
  }
  c.detail = s.str();
}

std::size_t center_search_cli(const std::vector<int>& dims, bool expect_conjugation, Check& c) {
  std::size_t candidates = 0;
  for (int n : dims) {
    std::ostringstream out, err;
    const int code = cli::run({"center-search", "--n", std::to_string(n), "--samples", "50", "--threads", "0", "--json"},
                              out, err);
    c.expect(code == cli::kExitOk, "center-search --n " + std::to_string(n) + " exit " + std::to_string(code));
    const auto j = cli::json::parse(out.str(), nullptr, false);
    if (j.is_discarded()) {
      c.expect(false, "unparsable JSON for n = " + std::to_string(n));
      continue;
    }
    const auto& reports = j["reports"];
    c.expect(reports.size() == Signature::all_of_dimension(n).size(), "signature count for n = " + std::to_string(n));
    for (const auto& rep : reports) {
      const std::string label = "Cl(" + rep["signature"][0].dump() + "," + rep["signature"][1].dump() + ")";
      const auto& both = rep["both_centers"];
      // Clifford conjugation negates grades {1,2}; for n = 1 only grade 1 exists.
      const auto conjugation = n == 1 ? cli::json::array({1}) : cli::json::array({1, 2});
      if (expect_conjugation)
        c.expect(std::find(both.begin(), both.end(), conjugation) != both.end(),
                 label + " missing " + conjugation.dump());
      else
        c.expect(both.empty(), label + " both_centers = " + both.dump());
      for (const auto& cand : rep["candidates"]) {
        ++candidates;
        c.expect(cand.contains("sampled_cen2") && cand["sampled_cen2"] == cand["cen2"],
                 label + " sampling disagrees for " + cand["negated_grades"].dump());
      }
    }
  }
  return candidates;
}

void quaternions(Check& c) {
  const Signature sig(0, 2);
  c.expect(MV(mv(sig, "e1") * mv(sig, "e2") * mv(sig, "e12")) == MV::scalar(sig, -1), "e1 e2 e12 != -1");
  std::mt19937_64 rng(7000);
  const auto one = MV::scalar(sig, 1);
  std::size_t tested = 0;
  auto check = [&](const MV& a) {
    if (a.is_zero()) return;
    ++tested;
    const auto bar = clifford_conjugate(a);
    const MV norm = a * bar;
    const Rational expected = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
    c.expect(norm == MV::scalar(sig, expected) && expected > 0, "a conj(a) for " + format_multivector(a));
    try {
      const auto inv = inverse(a);
      c.expect(inv == bar / expected && MV(a * inv) == one && MV(inv * a) == one,
               "inverse of " + format_multivector(a));
    } catch (const NonInvertible&) {
      c.expect(false, "non-invertible nonzero " + format_multivector(a));
    }
  };
  // Every sparsity pattern, then dense random draws including tiny fractions.
  for (std::uint32_t support = 1; support < 16; ++support)
    for (int t = 0; t < 20; ++t) {
      MV a(sig);
      for (std::uint32_t m = 0; m < 4; ++m)
        if (support >> m & 1) {
          Rational v = random_rational(rng, 9, 9);
          if (v == 0) v = 1;
          a = a.with({m}, v);
        }
      check(a);
    }
  for (int t = 0; t < 1000; ++t) check(random_multivector(sig, rng, 9, t % 2 ? 1 : 1000));
  c.detail = std::to_string(tested) + " nonzero quaternions inverted";
}

void oracle_matrices(Check& c) {
  std::size_t pairs = 0;
  for (const auto& sig : signatures(1, 4)) {
    std::mt19937_64 rng(8000 + sig.p() * 10 + sig.q());
    for (int t = 0; t < 100; ++t, ++pairs) {
      const auto a = random_multivector(sig, rng, 9, 3);
      const auto b = random_multivector(sig, rng, 9, 3);
      const auto la = left_matrix(a).entries, lb = left_matrix(b).entries;
      const auto ra = right_matrix(a).entries, rb = right_matrix(b).entries;
      const std::string where = sig.to_string() + " #" + std::to_string(t);
      c.expect(left_matrix(MV(a * b)).entries == la * lb, where + " L_ab");
      c.expect(right_matrix(MV(b * a)).entries == ra * rb, where + " R_ba");
      c.expect(la * rb == rb * la, where + " [L_a, R_b]");
    }
  }
  c.detail = std::to_string(pairs) + " pairs";
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--slow") {
      slow = true;
    } else {
      std::cerr << "usage: acceptance [--slow]\n";
      return 1;
    }
  }

  std::vector<Criterion> criteria{
      {"AC1", "worked example reproduced exactly", 1.0, worked_example},
      {"AC2", "formula B returns the identical x", 0, mirror_formula},
      {"AC3", "residual and agreement on 7 x 1000 random instances", 60.0, residual_suite},
      {"AC4", "center table rows match on 200 samples each", 0, table1},
      {"AC5", "a = b = e12 is singular for every closed form; oracle classifies by rank", 0, singularity},
      {"AC6", "center search n <= 4: {1,2} for n <= 3, none for n = 4", 60.0,
       [](Check& c) {
         const auto n = center_search_cli({1, 2, 3}, true, c) + center_search_cli({4}, false, c);
         c.detail = std::to_string(n) + " candidates, symbolic verdict matched 50 samples on each";
       }},
      {"AC7", "Cl(0,2) behaves like the quaternions", 0, quaternions},
      {"AC8", "L/R matrix identities on 100 pairs per algebra, n <= 4", 0, oracle_matrices},
  };
  if (slow)
    criteria.push_back({"AC6-slow", "center search n = 5, 6: none", 1800.0,
                        [](Check& c) {
                          const auto n = center_search_cli({5, 6}, false, c);
                          c.detail = std::to_string(n) + " candidates, symbolic verdict matched 50 samples on each";
                        }});

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds >= cr.budget_seconds)
      check.expect(false, "runtime " + std::to_string(seconds) + " s over budget");

    const bool ok = check.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] %-8s %s (%.3f s)\n", ok ? "PASS" : "FAIL", cr.id.c_str(), cr.title.c_str(), seconds);
    if (!check.detail.empty()) std::printf("         %s\n", check.detail.c_str());
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i)
      std::printf("         - %s\n", check.failures[i].c_str());
    if (check.failures.size() > 10) std::printf("         ... %zu more\n", check.failures.size() - 10);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
