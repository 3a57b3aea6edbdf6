#include "cliffsyl/involutions.hpp"

#include <algorithm>

namespace cliffsyl {

namespace {

std::uint32_t pattern_from_grades(const Signature& sig, auto&& grades) {
  std::uint32_t pattern = 0;
  for (int g : grades) {
    if (g < 0 || g > sig.n())
      throw GradeOutOfRange("grade " + std::to_string(g) + " outside 0.." + std::to_string(sig.n()));
    pattern |= 1u << g;
  }
  return pattern;
}

template <class Pred>
std::uint32_t pattern_where(const Signature& sig, Pred pred) {
  std::uint32_t pattern = 0;
  for (int g = 0; g <= sig.n(); ++g)
    if (pred(g)) pattern |= 1u << g;
  return pattern;
}

}  // namespace

GradeNegationMap::GradeNegationMap(const Signature& sig, std::uint32_t pattern)
    : sig_(sig), pattern_(pattern) {}

GradeNegationMap::GradeNegationMap(const Signature& sig, std::initializer_list<int> negated_grades)
    : sig_(sig), pattern_(pattern_from_grades(sig, negated_grades)) {}

GradeNegationMap::GradeNegationMap(const Signature& sig, const std::vector<int>& negated_grades)
    : sig_(sig), pattern_(pattern_from_grades(sig, negated_grades)) {}

GradeNegationMap GradeNegationMap::from_pattern(const Signature& sig, std::uint32_t pattern) {
  if (pattern >> (sig.n() + 1))
    throw GradeOutOfRange("grade pattern has bits above grade " + std::to_string(sig.n()));
  return {sig, pattern};
}

GradeNegationMap GradeNegationMap::clifford_conjugation(const Signature& sig) {
  return {sig, pattern_where(sig, [](int g) { return g % 4 == 1 || g % 4 == 2; })};
}

GradeNegationMap GradeNegationMap::grade_involution(const Signature& sig) {
  return {sig, pattern_where(sig, [](int g) { return g % 2 == 1; })};
}

GradeNegationMap GradeNegationMap::reversion(const Signature& sig) {
  return {sig, pattern_where(sig, [](int g) { return g % 4 == 2 || g % 4 == 3; })};
}

std::vector<int> GradeNegationMap::negated_grades() const {
  std::vector<int> out;
  for (int g = 0; g <= sig_.n(); ++g)
    if (negates(g)) out.push_back(g);
  return out;
}

std::string GradeNegationMap::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int g : negated_grades()) {
    if (!first) s += ",";
    s += std::to_string(g);
    first = false;
  }
  return s + "}";
}

template <class T>
Multivector<T> GradeNegationMap::operator()(const Multivector<T>& a) const {
  if (a.signature() != sig_)
    throw SignatureMismatch("grade negation over " + sig_.to_string() + " applied to " +
                            a.signature().to_string());
  std::vector<T> c(a.coeffs().begin(), a.coeffs().end());
  for (std::uint32_t m = 0; m < c.size(); ++m)
    if (negates(std::popcount(m))) c[m] = -c[m];
  return {sig_, std::move(c)};
}

template <class T>
Multivector<T> grade_negate(const Multivector<T>& a, const GradeNegationMap& m) {
  return m(a);
}

template <class T>
Multivector<T> clifford_conjugate(const Multivector<T>& a) {
  return GradeNegationMap::clifford_conjugation(a.signature())(a);
}

template <class T>
Multivector<T> reverse(const Multivector<T>& a) {
  return GradeNegationMap::reversion(a.signature())(a);
}

template <class T>
Multivector<T> grade_involute(const Multivector<T>& a) {
  return GradeNegationMap::grade_involution(a.signature())(a);
}

// Multiplying by a single generator only permutes and sign-flips the
// coefficients, so s*e = e*s reduces to a per-blade sign comparison.
template <class T>
bool is_central(const Multivector<T>& s) {
  const Signature& sig = s.signature();
  const BladeTable& table = blade_table(sig);
  for (int i = 1; i <= sig.n(); ++i) {
    const std::uint32_t e = BladeIndex::generator(i).mask;
    for (std::uint32_t u = 0; u < sig.blade_count(); ++u)
      if (!ScalarTraits<T>::is_zero(s[u]) && table.sign(u, e) != table.sign(e, u)) return false;
  }
  return true;
}

template <class T>
Multivector<T> cen1(const Multivector<T>& a, const GradeNegationMap& m) {
  return a + m(a);
}

template <class T>
Multivector<T> cen2(const Multivector<T>& a, const GradeNegationMap& m) {
  return a * m(a);
}

bool is_central_blade(const Signature& sig, BladeIndex b) {
  return is_central(Multivector<Rational>::blade(sig, b));
}

CenterBasis center_basis(const Signature& sig) {
  CenterBasis basis{sig, {}};
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
    if (is_central_blade(sig, {m})) basis.blades.push_back({m});
  return basis;
}

template Multivector<Rational> GradeNegationMap::operator()(const Multivector<Rational>&) const;
template Multivector<double> GradeNegationMap::operator()(const Multivector<double>&) const;
template Multivector<Rational> grade_negate(const Multivector<Rational>&, const GradeNegationMap&);
template Multivector<double> grade_negate(const Multivector<double>&, const GradeNegationMap&);
template Multivector<Rational> clifford_conjugate(const Multivector<Rational>&);
template Multivector<double> clifford_conjugate(const Multivector<double>&);
template Multivector<Rational> reverse(const Multivector<Rational>&);
template Multivector<double> reverse(const Multivector<double>&);
template Multivector<Rational> grade_involute(const Multivector<Rational>&);
template Multivector<double> grade_involute(const Multivector<double>&);
template bool is_central(const Multivector<Rational>&);
template bool is_central(const Multivector<double>&);
template Multivector<Rational> cen1(const Multivector<Rational>&, const GradeNegationMap&);
template Multivector<double> cen1(const Multivector<double>&, const GradeNegationMap&);
template Multivector<Rational> cen2(const Multivector<Rational>&, const GradeNegationMap&);
template Multivector<double> cen2(const Multivector<double>&, const GradeNegationMap&);

}  // namespace cliffsyl
