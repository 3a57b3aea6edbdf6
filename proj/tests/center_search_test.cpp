#include "cliffsyl/center_search.hpp"

#include <gtest/gtest.h>

#include <chrono>

#include "test_support.hpp"

namespace cliffsyl {
namespace {

using testing::MV;

const Signature kCl30(3, 0);

// Direct check, independent of the certificate: a sigma(a) commutes with
// every basis blade.
bool commutes_with_all_blades(const MV& x) {
  const Signature& sig = x.signature();
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    const auto blade = MV::blade(sig, {m});
    if (x * blade != blade * x) return false;
  }
  return true;
}

bool direct_sampled_cen2(const GradeNegationMap& sigma, int samples, std::mt19937_64& rng) {
  for (int s = 0; s < samples; ++s) {
    const auto a = random_multivector(sigma.signature(), rng, 9, 4);
    if (!commutes_with_all_blades(MV(a * sigma(a)))) return false;
  }
  return true;
}

TEST(CheckCen1, Examples) {
  EXPECT_TRUE(check_cen1(GradeNegationMap(kCl30, {1, 2})));
  EXPECT_FALSE(check_cen1(GradeNegationMap(Signature(2, 0), std::vector<int>{})));
  EXPECT_TRUE(check_cen1(GradeNegationMap(Signature(2, 0), {1, 2})));
  EXPECT_FALSE(check_cen1(GradeNegationMap(kCl30, {1, 3})));
  // Negating every grade makes a + sigma(a) vanish identically.
  EXPECT_TRUE(check_cen1(GradeNegationMap(Signature(3, 3), {0, 1, 2, 3, 4, 5, 6})));
}

TEST(CheckCen1, MatchesRandomEvaluation) {
  std::mt19937_64 rng(31);
  for (const auto& sig : testing::signatures(1, 4))
    for (std::uint32_t pattern = 0; pattern < (1u << (sig.n() + 1)); ++pattern) {
      const auto sigma = GradeNegationMap::from_pattern(sig, pattern);
      bool all = true;
      for (int s = 0; s < 20 && all; ++s) {
        const auto a = random_multivector(sig, rng);
        all = commutes_with_all_blades(MV(a + sigma(a)));
      }
      ASSERT_EQ(check_cen1(sigma), all) << sig.to_string() << " " << sigma.to_string();
    }
}

TEST(CheckCen2, Examples) {
  EXPECT_TRUE(check_cen2(GradeNegationMap(kCl30, {1, 2})).holds);
  EXPECT_TRUE(check_cen2(GradeNegationMap(kCl30, {0, 3})).holds);
  EXPECT_FALSE(check_cen2(GradeNegationMap(kCl30, {1})).holds);

  const GradeNegationMap g1(Signature(2, 0), {1});
  const auto result = check_cen2(g1);
  std::mt19937_64 rng(32);
  EXPECT_EQ(result.holds, direct_sampled_cen2(g1, 10, rng));
  EXPECT_FALSE(result.holds);
  EXPECT_GT(result.certificate.term_count(), 0u);

  for (const auto& sig : testing::signatures(2, 4)) {
    std::vector<int> all;
    for (int g = 0; g <= sig.n(); ++g) all.push_back(g);
    EXPECT_FALSE(check_cen2(GradeNegationMap(sig, all)).holds) << sig.to_string();
  }
}

TEST(CheckCen2, CertificateEvaluatesToTheCommutator) {
  std::mt19937_64 rng(33);
  for (const auto& sig : testing::signatures(1, 3))
    for (std::uint32_t pattern = 0; pattern < (1u << (sig.n() + 1)); ++pattern) {
      const auto sigma = GradeNegationMap::from_pattern(sig, pattern);
      const auto cert = check_cen2(sigma).certificate;
      ASSERT_EQ(cert.forms.size(), static_cast<std::size_t>(sig.n()));
      const auto a = random_multivector(sig, rng, 9, 3);
      const MV x = a * sigma(a);
      for (const auto& form : cert.forms) {
        const auto e = MV::generator(sig, form.generator);
        const MV commutator = x * e - e * x;
        MV evaluated(sig);
        for (const auto& t : form.terms)
          evaluated = evaluated.with({t.blade}, evaluated[t.blade] + Rational(t.coefficient) * a[t.j] * a[t.k]);
        ASSERT_EQ(evaluated, commutator) << sig.to_string() << " " << sigma.to_string();
      }
    }
}

TEST(CheckCen2, GlobalSignFlipSharesVerdict) {
  for (const auto& sig : testing::signatures(1, 5)) {
    const std::uint32_t full = (1u << (sig.n() + 1)) - 1;
    for (std::uint32_t pattern = 0; pattern <= full; ++pattern)
      ASSERT_EQ(check_cen2(GradeNegationMap::from_pattern(sig, pattern)).holds,
                check_cen2(GradeNegationMap::from_pattern(sig, pattern ^ full)).holds);
  }
}

class SymbolicVsNumeric : public ::testing::TestWithParam<Signature> {};

TEST_P(SymbolicVsNumeric, EveryCandidate) {
  const Signature sig = GetParam();
  std::mt19937_64 rng(34 + sig.p() * 3 + sig.q());
  for (std::uint32_t pattern = 0; pattern < (1u << (sig.n() + 1)); ++pattern) {
    const auto sigma = GradeNegationMap::from_pattern(sig, pattern);
    const bool symbolic = check_cen2(sigma).holds;
    ASSERT_EQ(symbolic, direct_sampled_cen2(sigma, 50, rng)) << sigma.to_string();
    ASSERT_EQ(symbolic, sample_cen2(sigma, 50, 1000 + pattern)) << sigma.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(UpToFour, SymbolicVsNumeric, ::testing::ValuesIn(testing::signatures(1, 4)),
                         testing::sig_label);

TEST(CheckCen2, SpotChecksInFiveAndSix) {
  std::mt19937_64 rng(35);
  for (const auto& sig : {Signature(5, 0), Signature(2, 3), Signature(6, 0), Signature(3, 3)})
    for (std::uint32_t pattern : {0b000110u, 0b001001u, 0b010110u, 0b000001u}) {
      const auto sigma = GradeNegationMap::from_pattern(sig, pattern & ((1u << (sig.n() + 1)) - 1));
      EXPECT_EQ(check_cen2(sigma).holds, direct_sampled_cen2(sigma, 5, rng)) << sig.to_string();
    }
}

TEST(Search, DimensionThree) {
  for (const auto& sig : Signature::all_of_dimension(3)) {
    const auto report = search(sig, {20, 7, 1});
    EXPECT_EQ(report.candidates_total, 16u);
    ASSERT_EQ(report.candidates.size(), 16u);
    ASSERT_EQ(report.both_centers.size(), 1u) << sig.to_string();
    EXPECT_EQ(report.both_centers[0], GradeNegationMap::clifford_conjugation(sig));
    EXPECT_TRUE(report.sampling_agrees);
    std::vector<std::string> cen2;
    for (const auto& s : report.cen2_holds) cen2.push_back(s.to_string());
    EXPECT_EQ(cen2, (std::vector<std::string>{"{1,2}", "{0,3}"}));
  }
}

TEST(Search, DimensionTwoAndOne) {
  for (const auto& sig : Signature::all_of_dimension(2)) {
    const auto report = search(sig);
    bool found = false;
    for (const auto& s : report.both_centers) found = found || s == GradeNegationMap::clifford_conjugation(sig);
    EXPECT_TRUE(found) << sig.to_string();
  }
  // Cl(1,0) and Cl(0,1) are commutative; every candidate satisfies both.
  for (const auto& sig : Signature::all_of_dimension(1)) EXPECT_EQ(search(sig).both_centers.size(), 4u);
}

TEST(Search, DimensionFourHasNoCandidate) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& sig : Signature::all_of_dimension(4)) {
    const auto report = search(sig, {50, 11, 0});
    EXPECT_EQ(report.candidates_total, 32u);
    EXPECT_TRUE(report.both_centers.empty()) << sig.to_string();
    EXPECT_TRUE(report.sampling_agrees);
    std::vector<std::string> cen1;
    for (const auto& s : report.cen1_only) cen1.push_back(s.to_string());
    EXPECT_EQ(cen1, (std::vector<std::string>{"{1,2,3,4}", "{0,1,2,3,4}"}));
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
}

TEST(Search, DeterministicAcrossThreadCounts) {
  const Signature sig(2, 2);
  const auto one = search(sig, {10, 5, 1});
  const auto many = search(sig, {10, 5, 4});
  ASSERT_EQ(one.candidates.size(), many.candidates.size());
  for (std::size_t i = 0; i < one.candidates.size(); ++i) {
    EXPECT_EQ(one.candidates[i].sigma, many.candidates[i].sigma);
    EXPECT_EQ(one.candidates[i].cen1, many.candidates[i].cen1);
    EXPECT_EQ(one.candidates[i].cen2, many.candidates[i].cen2);
    EXPECT_EQ(one.candidates[i].certificate_terms, many.candidates[i].certificate_terms);
    EXPECT_EQ(one.candidates[i].sampled_cen2, many.candidates[i].sampled_cen2);
  }
  EXPECT_FALSE(one.candidates[0].sampled_cen2 == std::nullopt);
  EXPECT_FALSE(search(sig).candidates[0].sampled_cen2.has_value());
}

}  // namespace
}  // namespace cliffsyl
