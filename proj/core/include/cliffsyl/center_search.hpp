#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffsyl/involutions.hpp"

namespace cliffsyl {

// Coefficient of a_j a_k (j <= k) in one blade component of a commutator.
struct QuadraticTerm {
  std::uint32_t blade;
  std::uint32_t j;
  std::uint32_t k;
  std::int64_t coefficient;
};

// Symbolic commutator [a sigma(a), e_i] as one quadratic form in the 2^n
// coefficients of a per output blade. Only nonzero terms are kept.
struct GeneratorForms {
  int generator;  // 1-indexed
  std::vector<QuadraticTerm> terms;
};

// a sigma(a) is central for every a iff every form is identically zero,
// i.e. iff no terms survive.
struct QuadraticFormCertificate {
  GradeNegationMap sigma;
  std::vector<GeneratorForms> forms;

  bool identically_zero() const {
    for (const auto& f : forms)
      if (!f.terms.empty()) return false;
    return true;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& f : forms) n += f.terms.size();
    return n;
  }
};

// a + sigma(a) is central for all a. By linearity this holds iff every blade
// whose grade sigma keeps is central.
bool check_cen1(const GradeNegationMap& sigma);

struct Cen2Check {
  bool holds;
  QuadraticFormCertificate certificate;
};

// a sigma(a) is central for all a, decided by expanding the commutator
// symbolically.
Cen2Check check_cen2(const GradeNegationMap& sigma);

// Randomized counterpart of check_cen2: true iff a sigma(a) is central for
// every one of `samples` random rational a.
bool sample_cen2(const GradeNegationMap& sigma, std::size_t samples, std::uint64_t seed);

struct CandidateResult {
  GradeNegationMap sigma;
  bool cen1;
  bool cen2;
  std::size_t certificate_terms;
  std::uint32_t sign_flip_partner;  // pattern of -sigma; shares the cen2 verdict
  std::optional<bool> sampled_cen2;  // present when sampling was requested
};

struct SearchReport {
  Signature sig;
  std::size_t candidates_total;
  std::vector<GradeNegationMap> cen1_only;     // sigma with a + sigma(a) central for all a
  std::vector<GradeNegationMap> cen2_holds;    // sigma with a sigma(a) central for all a
  std::vector<GradeNegationMap> both_centers;  // both conditions
  std::vector<CandidateResult> candidates;     // ascending grade-sign pattern
  // True iff every sampled verdict matched the symbolic one (vacuous
  // without sampling).
  bool sampling_agrees;
};

struct SearchOptions {
  std::size_t samples = 0;  // randomized cross-check per candidate; 0 disables
  std::uint64_t seed = 0x5eedc0ffeeULL;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Header line for reports: the candidate space searched.
extern const char* const kSearchRestriction;

// Exhausts all 2^(n+1) grade-sign patterns. Output is deterministic
// regardless of thread count.
SearchReport search(const Signature& sig, const SearchOptions& opts = {});

}  // namespace cliffsyl
