#include "cliffsyl/inversion.hpp"

#include <cmath>

#include "cliffsyl/involutions.hpp"

namespace cliffsyl {

namespace {

// Exact zero test for rationals; scaled tolerance for floats.
template <class T>
bool vanishes(const T& value, double scale, const InverseOptions& opts) {
  if constexpr (ScalarTraits<T>::exact)
    return ScalarTraits<T>::is_zero(value);
  else
    return std::fabs(value) <= opts.tolerance * scale;
}

// The norm must come out as a pure scalar; anything else is a product-rule
// bug.
template <class T>
void require_scalar(const Multivector<T>& norm, double scale, const char* what) {
  bool ok = true;
  for (std::uint32_t m = 1; m < norm.size(); ++m) {
    if constexpr (ScalarTraits<T>::exact)
      ok = ok && ScalarTraits<T>::is_zero(norm[m]);
    else
      ok = ok && std::fabs(norm[m]) <= 1e-9 * std::max(scale, 1e-300);
  }
  if (!ok) throw InternalInvariantViolation(std::string(what) + " has non-scalar components");
}

}  // namespace

template <class T>
Multivector<T> inverse_n2(const Multivector<T>& a, const InverseOptions& opts) {
  if (a.signature().n() > 2)
    throw UnsupportedDimension("inverse_n2 requires n <= 2, got " + a.signature().to_string());
  const Multivector<T> conj = clifford_conjugate(a);
  const Multivector<T> norm = a * conj;
  const double scale = std::pow(norm2(a), 2);
  require_scalar(norm, scale, "a*conj(a)");
  if (vanishes(norm[0], scale, opts)) throw NonInvertible("a*conj(a) = 0");
  return conj / norm[0];
}

template <class T>
Multivector<T> inverse_n3(const Multivector<T>& a, const InverseOptions& opts) {
  const Signature& sig = a.signature();
  if (sig.n() != 3) throw UnsupportedDimension("inverse_n3 requires n = 3, got " + sig.to_string());
  const Multivector<T> c = GradeNegationMap(sig, {1, 2})(a);
  const Multivector<T> d = a * c;
  const Multivector<T> numerator = c * GradeNegationMap(sig, {3})(d);
  const Multivector<T> denominator = a * numerator;
  const double scale = std::pow(norm2(a), 4);
  require_scalar(denominator, scale, "a*C*(aC)_{3bar}");
  if (vanishes(denominator[0], scale, opts)) throw NonInvertible("a*C*(aC)_{3bar} = 0");
  return numerator / denominator[0];
}

template <class T>
Multivector<T> inverse(const Multivector<T>& a, const InverseOptions& opts) {
  const int n = a.signature().n();
  if (n <= 2) return inverse_n2(a, opts);
  if (n == 3) return inverse_n3(a, opts);
  throw UnsupportedDimension("closed-form inverse is provided only for n <= 3, got " +
                             a.signature().to_string());
}

template Multivector<Rational> inverse_n2(const Multivector<Rational>&, const InverseOptions&);
template Multivector<double> inverse_n2(const Multivector<double>&, const InverseOptions&);
template Multivector<Rational> inverse_n3(const Multivector<Rational>&, const InverseOptions&);
template Multivector<double> inverse_n3(const Multivector<double>&, const InverseOptions&);
template Multivector<Rational> inverse(const Multivector<Rational>&, const InverseOptions&);
template Multivector<double> inverse(const Multivector<double>&, const InverseOptions&);

}  // namespace cliffsyl
