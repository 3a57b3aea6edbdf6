#pragma once

#include "cliffsyl/multivector.hpp"

namespace cliffsyl {

// Float-mode singularity threshold. The norm being tested has degree k in
// the coefficients of a (k = 2 for n <= 2, k = 4 for n = 3); it is treated as
// zero when |norm| <= tolerance * |a|_2^k. Ignored in rational mode, where
// the test is exact.
struct InverseOptions {
  double tolerance = 1e-12;
};

// n <= 2: a^-1 = conj(a) / (a conj(a)), with a conj(a) a scalar.
template <class T>
Multivector<T> inverse_n2(const Multivector<T>& a, const InverseOptions& opts = {});

// n = 3: with C = a_{1bar,2bar} and D = aC,
//   a^-1 = C D_{3bar} / (a C D_{3bar}),
// where the denominator is a scalar for every a.
template <class T>
Multivector<T> inverse_n3(const Multivector<T>& a, const InverseOptions& opts = {});

// Dispatches on dimension; throws UnsupportedDimension for n >= 4.
template <class T>
Multivector<T> inverse(const Multivector<T>& a, const InverseOptions& opts = {});

extern template Multivector<Rational> inverse_n2(const Multivector<Rational>&, const InverseOptions&);
extern template Multivector<double> inverse_n2(const Multivector<double>&, const InverseOptions&);
extern template Multivector<Rational> inverse_n3(const Multivector<Rational>&, const InverseOptions&);
extern template Multivector<double> inverse_n3(const Multivector<double>&, const InverseOptions&);
extern template Multivector<Rational> inverse(const Multivector<Rational>&, const InverseOptions&);
extern template Multivector<double> inverse(const Multivector<double>&, const InverseOptions&);

}  // namespace cliffsyl
