#pragma once

#include <optional>

#include "cliffsyl/inversion.hpp"
#include "cliffsyl/oracle.hpp"

namespace cliffsyl {

enum class SolveStatus {
  Unique,
  // The requested closed form has a non-invertible denominator.
  Singular,
  // Every applicable route failed, the oracle included; see `oracle`.
  SingularBothFormulas,
};

enum class SolveMethod { FormulaA, FormulaB, SpecialCaseBA, Oracle };

enum class MethodPolicy { Auto, FormulaAOnly, FormulaBOnly, OracleOnly };

const char* to_string(SolveStatus s);
const char* to_string(SolveMethod m);

// Outcome of solving a x + x b = c.
template <class T>
struct SolveOutcome {
  SolveStatus status;
  SolveMethod method;
  std::optional<Multivector<T>> solution;     // present iff Unique
  std::optional<Multivector<T>> denominator;  // the multivector that was inverted
  std::optional<OracleOutcome<T>> oracle;     // rank diagnosis when the oracle ran
};

struct SolveOptions {
  InverseOptions inverse;
  OracleOptions oracle;
};

// x = [(a^2 + b conj(b)) + a(b + conj(b))]^-1 (a c + c conj(b)).
// Singular denominators are reported in the outcome, not thrown.
template <class T>
SolveOutcome<T> solve_formula_a(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                                const SolveOptions& opts = {});

// x = (conj(a) c + c b) [(b^2 + conj(a) a) + b(a + conj(a))]^-1.
template <class T>
SolveOutcome<T> solve_formula_b(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                                const SolveOptions& opts = {});

// a x + x a = c: x = [2(a + conj(a))]^-1 (c + a^-1 c conj(a)).
// Singular when a + conj(a) is not invertible; throws NonInvertible when a
// itself is not.
template <class T>
SolveOutcome<T> solve_equal_coeff(const Multivector<T>& a, const Multivector<T>& c, const SolveOptions& opts = {});

// Auto: special case (b == a), then formula A, then B, then the oracle.
template <class T>
SolveOutcome<T> solve(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                      MethodPolicy policy = MethodPolicy::Auto, const SolveOptions& opts = {});

#define CLIFFSYL_DECLARE_SYLVESTER(T)                                                                      \
  extern template SolveOutcome<T> solve_formula_a(const Multivector<T>&, const Multivector<T>&,            \
                                                  const Multivector<T>&, const SolveOptions&);             \
  extern template SolveOutcome<T> solve_formula_b(const Multivector<T>&, const Multivector<T>&,            \
                                                  const Multivector<T>&, const SolveOptions&);             \
  extern template SolveOutcome<T> solve_equal_coeff(const Multivector<T>&, const Multivector<T>&,          \
                                                    const SolveOptions&);                                  \
  extern template SolveOutcome<T> solve(const Multivector<T>&, const Multivector<T>&, const Multivector<T>&, \
                                        MethodPolicy, const SolveOptions&);

CLIFFSYL_DECLARE_SYLVESTER(Rational)
CLIFFSYL_DECLARE_SYLVESTER(double)

#undef CLIFFSYL_DECLARE_SYLVESTER

}  // namespace cliffsyl
