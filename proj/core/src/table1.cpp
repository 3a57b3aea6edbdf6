#include "cliffsyl/table1.hpp"

#include "cliffsyl/random.hpp"

namespace cliffsyl {

const std::vector<Table1Row>& table1_rows() {
  // n = 3 masks: 0:a0 1:a1 2:a2 3:a12 4:a3 5:a13 6:a23 7:a123.
  static const std::vector<Table1Row::Product> kPseudo = {{+1, 0, 7}, {-1, 1, 6}, {+1, 2, 5}, {-1, 4, 3}};
  static const std::vector<Table1Row> rows = {
      {2, 0, {1, 2}, {+1, -1, -1, +1}, {}},
      {1, 1, {1, 2}, {+1, -1, +1, -1}, {}},
      {0, 2, {1, 2}, {+1, +1, +1, +1}, {}},
      {3, 0, {1, 2}, {+1, -1, -1, +1, -1, +1, +1, -1}, kPseudo},
      {2, 1, {1, 2}, {+1, -1, -1, +1, +1, -1, -1, +1}, kPseudo},
      {1, 2, {1, 2}, {+1, -1, +1, -1, +1, -1, +1, -1}, kPseudo},
      {0, 3, {1, 2}, {+1, +1, +1, +1, +1, +1, +1, +1}, kPseudo},
  };
  return rows;
}

Multivector<Rational> table1_cen1(const Table1Row& row, const Multivector<Rational>& a) {
  const Signature sig(row.p, row.q);
  Multivector<Rational> out = Multivector<Rational>::scalar(sig, 2 * a[0]);
  if (sig.n() == 3) out = out.with(BladeIndex::pseudoscalar(sig), 2 * a[7]);
  return out;
}

Multivector<Rational> table1_cen2(const Table1Row& row, const Multivector<Rational>& a) {
  const Signature sig(row.p, row.q);
  Rational scalar = 0;
  for (std::uint32_t m = 0; m < row.square_signs.size(); ++m) scalar += row.square_signs[m] * a[m] * a[m];
  Multivector<Rational> out = Multivector<Rational>::scalar(sig, scalar);
  if (!row.pseudo_terms.empty()) {
    Rational pseudo = 0;
    for (const auto& t : row.pseudo_terms) pseudo += t.sign * a[t.u] * a[t.v];
    out = out.with(BladeIndex::pseudoscalar(sig), 2 * pseudo);
  }
  return out;
}

std::vector<Table1RowResult> verify_table1(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Table1RowResult> results;
  for (const auto& row : table1_rows()) {
    const Signature sig(row.p, row.q);
    const GradeNegationMap conj(sig, row.conjugation_grades);
    Table1RowResult r{sig, samples};
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = random_multivector(sig, rng, 9, 4);
      const auto c1 = cen1(a, conj);
      const auto c2 = cen2(a, conj);
      if (c1 != table1_cen1(row, a)) ++r.cen1_mismatches;
      if (c2 != table1_cen2(row, a)) ++r.cen2_mismatches;
      if (!is_central(c1) || !is_central(c2)) ++r.non_central;
    }
    results.push_back(r);
  }
  return results;
}

}  // namespace cliffsyl
