#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsyl/involutions.hpp"

namespace cliffsyl {

// One row of the reference table of Clifford algebras whose Sylvester
// equation has a coordinate-free solution, transcribed as data:
//   conj(a)          = a_{1bar,2bar}
//   a + conj(a)      = 2 a_0 (+ 2 a_123 I for n = 3)
//   a conj(a) scalar = sum_m square_signs[m] * a_m^2
//   a conj(a) I part = 2 * sum_t sign_t * a_{u_t} a_{v_t}     (n = 3 only)
// Masks follow blade order: for n = 2 the flat label a_3 is the e12
// coefficient (mask 3); for n = 3, a_3 is e3 (mask 4).
struct Table1Row {
  struct Product {
    int sign;
    std::uint32_t u;
    std::uint32_t v;
  };

  int p;
  int q;
  std::vector<int> conjugation_grades;
  std::vector<int> square_signs;       // indexed by blade mask
  std::vector<Product> pseudo_terms;   // empty for n = 2
};

const std::vector<Table1Row>& table1_rows();

// Cen1 and Cen2 as printed in the row, evaluated at a.
Multivector<Rational> table1_cen1(const Table1Row& row, const Multivector<Rational>& a);
Multivector<Rational> table1_cen2(const Table1Row& row, const Multivector<Rational>& a);

struct Table1RowResult {
  Signature sig;
  std::size_t samples;
  std::size_t cen1_mismatches = 0;
  std::size_t cen2_mismatches = 0;
  std::size_t non_central = 0;

  bool passed() const { return cen1_mismatches == 0 && cen2_mismatches == 0 && non_central == 0; }
};

// For each row and `samples` random rational a: compares a + conj(a) and
// a conj(a) with the printed expressions exactly and checks centrality.
std::vector<Table1RowResult> verify_table1(std::size_t samples, std::uint64_t seed);

}  // namespace cliffsyl
