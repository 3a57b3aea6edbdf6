#include "cliffsyl/sylvester.hpp"

#include "cliffsyl/involutions.hpp"

namespace cliffsyl {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Singular: return "singular";
    case SolveStatus::SingularBothFormulas: return "singular_both_formulas";
  }
  return "?";
}

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::FormulaA: return "formula_a";
    case SolveMethod::FormulaB: return "formula_b";
    case SolveMethod::SpecialCaseBA: return "special_ba";
    case SolveMethod::Oracle: return "oracle";
  }
  return "?";
}

namespace {

void require_closed_form_dimension(const Signature& sig, const char* what) {
  if (sig.n() > 3)
    throw UnsupportedDimension(std::string(what) + " is only valid for n <= 3, got " + sig.to_string());
}

// Exact in rational mode. In float mode the products pick up rounding noise,
// so non-central components only need to be small relative to the value.
template <class T>
bool central_enough(const Multivector<T>& s) {
  if constexpr (ScalarTraits<T>::exact) {
    return is_central(s);
  } else {
    const double tol = 1e-9 * std::max(max_abs(s), 1e-300);
    const Signature& sig = s.signature();
    for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
      if (std::fabs(s[m]) > tol && !is_central_blade(sig, {m})) return false;
    return true;
  }
}

// The closed forms rely on x + conj(x) and x conj(x) commuting with
// everything; for n <= 3 this always holds.
template <class T>
void require_centers(const Multivector<T>& v, const Multivector<T>& v_conj) {
  if (!central_enough(Multivector<T>(v + v_conj)) || !central_enough(Multivector<T>(v * v_conj)))
    throw InternalInvariantViolation("x + conj(x) or x conj(x) is not central in " + v.signature().to_string());
}

template <class T>
std::optional<Multivector<T>> try_inverse(const Multivector<T>& d, const SolveOptions& opts) {
  try {
    return inverse(d, opts.inverse);
  } catch (const NonInvertible&) {
    return std::nullopt;
  }
}

template <class T>
SolveOutcome<T> singular(SolveMethod method, Multivector<T> denominator) {
  return {SolveStatus::Singular, method, std::nullopt, std::move(denominator), std::nullopt};
}

template <class T>
SolveOutcome<T> from_oracle(OracleOutcome<T> oracle, SolveStatus failure) {
  SolveOutcome<T> out{failure, SolveMethod::Oracle, std::nullopt, std::nullopt, std::nullopt};
  if (oracle.status == OracleStatus::Unique) {
    out.status = SolveStatus::Unique;
    out.solution = oracle.particular;
  }
  out.oracle = std::move(oracle);
  return out;
}

}  // namespace

template <class T>
SolveOutcome<T> solve_formula_a(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                                const SolveOptions& opts) {
  a.require_same_signature(b);
  a.require_same_signature(c);
  require_closed_form_dimension(a.signature(), "formula A");
  const Multivector<T> b_conj = clifford_conjugate(b);
  require_centers(b, b_conj);

  const Multivector<T> denominator = (a * a + b * b_conj) + a * (b + b_conj);
  const auto inv = try_inverse(denominator, opts);
  if (!inv) return singular(SolveMethod::FormulaA, denominator);
  return {SolveStatus::Unique, SolveMethod::FormulaA, *inv * (a * c + c * b_conj), denominator, std::nullopt};
}

template <class T>
SolveOutcome<T> solve_formula_b(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                                const SolveOptions& opts) {
  a.require_same_signature(b);
  a.require_same_signature(c);
  require_closed_form_dimension(a.signature(), "formula B");
  const Multivector<T> a_conj = clifford_conjugate(a);
  require_centers(a, a_conj);

  const Multivector<T> denominator = (b * b + a_conj * a) + b * (a + a_conj);
  const auto inv = try_inverse(denominator, opts);
  if (!inv) return singular(SolveMethod::FormulaB, denominator);
  return {SolveStatus::Unique, SolveMethod::FormulaB, (a_conj * c + c * b) * *inv, denominator, std::nullopt};
}

template <class T>
SolveOutcome<T> solve_equal_coeff(const Multivector<T>& a, const Multivector<T>& c, const SolveOptions& opts) {
  a.require_same_signature(c);
  require_closed_form_dimension(a.signature(), "the b = a reduction");
  const Multivector<T> a_conj = clifford_conjugate(a);
  const Multivector<T> denominator = T(2) * (a + a_conj);
  const auto inv = try_inverse(denominator, opts);
  if (!inv) return singular(SolveMethod::SpecialCaseBA, denominator);
  const Multivector<T> a_inv = inverse(a, opts.inverse);
  return {SolveStatus::Unique, SolveMethod::SpecialCaseBA, *inv * (c + a_inv * c * a_conj), denominator,
          std::nullopt};
}

template <class T>
SolveOutcome<T> solve(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                      MethodPolicy policy, const SolveOptions& opts) {
  a.require_same_signature(b);
  a.require_same_signature(c);
  switch (policy) {
    case MethodPolicy::FormulaAOnly: return solve_formula_a(a, b, c, opts);
    case MethodPolicy::FormulaBOnly: return solve_formula_b(a, b, c, opts);
    case MethodPolicy::OracleOnly: return from_oracle(oracle_solve(a, b, c, opts.oracle), SolveStatus::Singular);
    case MethodPolicy::Auto: break;
  }

  std::optional<Multivector<T>> first_denominator;
  if (a.signature().n() <= 3) {
    if (a == b) {
      try {
        auto special = solve_equal_coeff(a, c, opts);
        if (special.status == SolveStatus::Unique) return special;
        first_denominator = special.denominator;
      } catch (const NonInvertible&) {
        // a itself is singular; A and B do not need a^-1.
      }
    }
    auto via_a = solve_formula_a(a, b, c, opts);
    if (via_a.status == SolveStatus::Unique) return via_a;
    if (!first_denominator) first_denominator = via_a.denominator;
    auto via_b = solve_formula_b(a, b, c, opts);
    if (via_b.status == SolveStatus::Unique) return via_b;
  }
  auto out = from_oracle(oracle_solve(a, b, c, opts.oracle), SolveStatus::SingularBothFormulas);
  if (out.status != SolveStatus::Unique) out.denominator = first_denominator;
  return out;
}

#define CLIFFSYL_INSTANTIATE_SYLVESTER(T)                                                                     \
  template SolveOutcome<T> solve_formula_a(const Multivector<T>&, const Multivector<T>&, const Multivector<T>&, \
                                           const SolveOptions&);                                              \
  template SolveOutcome<T> solve_formula_b(const Multivector<T>&, const Multivector<T>&, const Multivector<T>&, \
                                           const SolveOptions&);                                              \
  template SolveOutcome<T> solve_equal_coeff(const Multivector<T>&, const Multivector<T>&, const SolveOptions&); \
  template SolveOutcome<T> solve(const Multivector<T>&, const Multivector<T>&, const Multivector<T>&,          \
                                 MethodPolicy, const SolveOptions&);

CLIFFSYL_INSTANTIATE_SYLVESTER(Rational)
CLIFFSYL_INSTANTIATE_SYLVESTER(double)

}  // namespace cliffsyl
