#pragma once

#include <random>

#include "cliffsyl/multivector.hpp"

namespace cliffsyl {

// Rational with numerator uniform in [-max_num, max_num] and denominator
// uniform in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 1) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Multivector<Rational> random_multivector(const Signature& sig, std::mt19937_64& rng, int max_num = 9,
                                                int max_den = 1) {
  std::vector<Rational> c(sig.blade_count());
  for (auto& x : c) x = random_rational(rng, max_num, max_den);
  return {sig, std::move(c)};
}

inline Multivector<double> random_float_multivector(const Signature& sig, std::mt19937_64& rng,
                                                    double bound = 10.0) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  std::vector<double> c(sig.blade_count());
  for (auto& x : c) x = dist(rng);
  return {sig, std::move(c)};
}

}  // namespace cliffsyl
