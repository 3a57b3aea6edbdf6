#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cliffsyl/multivector.hpp"

namespace cliffsyl {

// Linear map flipping the sign of every blade whose grade is in the negated
// set; written a_{1bar,2bar} for negated grades {1,2}. Always an involution.
class GradeNegationMap {
 public:
  GradeNegationMap(const Signature& sig, std::initializer_list<int> negated_grades);
  GradeNegationMap(const Signature& sig, const std::vector<int>& negated_grades);

  // Bit g set iff grade g is negated; bits above n are rejected.
  static GradeNegationMap from_pattern(const Signature& sig, std::uint32_t pattern);

  // Grades g with g mod 4 in {1,2}; equals {1,2} for n <= 3.
  static GradeNegationMap clifford_conjugation(const Signature& sig);
  // Odd grades.
  static GradeNegationMap grade_involution(const Signature& sig);
  // Grades g with g mod 4 in {2,3}.
  static GradeNegationMap reversion(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  std::uint32_t pattern() const noexcept { return pattern_; }
  bool negates(int grade) const noexcept { return (pattern_ >> grade) & 1u; }
  int sign_of_blade(std::uint32_t mask) const noexcept { return negates(std::popcount(mask)) ? -1 : 1; }
  std::vector<int> negated_grades() const;

  // "{1,2}" style.
  std::string to_string() const;

  template <class T>
  Multivector<T> operator()(const Multivector<T>& a) const;

  friend bool operator==(const GradeNegationMap&, const GradeNegationMap&) = default;

 private:
  GradeNegationMap(const Signature& sig, std::uint32_t pattern);

  Signature sig_;
  std::uint32_t pattern_;
};

template <class T>
Multivector<T> grade_negate(const Multivector<T>& a, const GradeNegationMap& m);

template <class T>
Multivector<T> clifford_conjugate(const Multivector<T>& a);

template <class T>
Multivector<T> reverse(const Multivector<T>& a);

template <class T>
Multivector<T> grade_involute(const Multivector<T>& a);

// s * e_i == e_i * s for every generator (sufficient for the whole algebra).
template <class T>
bool is_central(const Multivector<T>& s);

// a + m(a). Not central for arbitrary m; check with is_central.
template <class T>
Multivector<T> cen1(const Multivector<T>& a, const GradeNegationMap& m);

// a * m(a).
template <class T>
Multivector<T> cen2(const Multivector<T>& a, const GradeNegationMap& m);

// Blades spanning the algebra center, found by testing every basis blade.
struct CenterBasis {
  Signature sig;
  std::vector<BladeIndex> blades;
};

CenterBasis center_basis(const Signature& sig);

bool is_central_blade(const Signature& sig, BladeIndex b);

extern template Multivector<Rational> GradeNegationMap::operator()(const Multivector<Rational>&) const;
extern template Multivector<double> GradeNegationMap::operator()(const Multivector<double>&) const;
extern template Multivector<Rational> grade_negate(const Multivector<Rational>&, const GradeNegationMap&);
extern template Multivector<double> grade_negate(const Multivector<double>&, const GradeNegationMap&);
extern template Multivector<Rational> clifford_conjugate(const Multivector<Rational>&);
extern template Multivector<double> clifford_conjugate(const Multivector<double>&);
extern template Multivector<Rational> reverse(const Multivector<Rational>&);
extern template Multivector<double> reverse(const Multivector<double>&);
extern template Multivector<Rational> grade_involute(const Multivector<Rational>&);
extern template Multivector<double> grade_involute(const Multivector<double>&);
extern template bool is_central(const Multivector<Rational>&);
extern template bool is_central(const Multivector<double>&);
extern template Multivector<Rational> cen1(const Multivector<Rational>&, const GradeNegationMap&);
extern template Multivector<double> cen1(const Multivector<double>&, const GradeNegationMap&);
extern template Multivector<Rational> cen2(const Multivector<Rational>&, const GradeNegationMap&);
extern template Multivector<double> cen2(const Multivector<double>&, const GradeNegationMap&);

}  // namespace cliffsyl
