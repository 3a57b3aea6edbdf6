#include "cliffsyl/center_search.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

#include "cliffsyl/random.hpp"

namespace cliffsyl {

const char* const kSearchRestriction =
    "candidates are grade-sign patterns only (each grade kept or negated); patterns that differ by a global "
    "sign flip are listed separately and share the a*sigma(a) verdict";

bool check_cen1(const GradeNegationMap& sigma) {
  const Signature& sig = sigma.signature();
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
    if (!sigma.negates(std::popcount(m)) && !is_central_blade(sig, {m})) return false;
  return true;
}

// a sigma(a) = sum_{j,k} a_j a_k s_k sign(j,k) e_{j^k}; the commutator with
// e_i only keeps products e_{j^k} that anticommute with e_i.
Cen2Check check_cen2(const GradeNegationMap& sigma) {
  const Signature& sig = sigma.signature();
  const BladeTable& table = blade_table(sig);
  const std::uint32_t count = sig.blade_count();

  QuadraticFormCertificate cert{sigma, {}};
  std::vector<std::int64_t> acc(static_cast<std::size_t>(count) * count * count);
  auto at = [count](std::uint32_t blade, std::uint32_t j, std::uint32_t k) -> std::size_t {
    return (static_cast<std::size_t>(blade) * count + j) * count + k;
  };

  for (int i = 1; i <= sig.n(); ++i) {
    const std::uint32_t e = BladeIndex::generator(i).mask;
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t j = 0; j < count; ++j)
      for (std::uint32_t k = 0; k < count; ++k) {
        const std::uint32_t prod = j ^ k;
        const int commutator = table.sign(prod, e) - table.sign(e, prod);  // 0 or +-2
        if (commutator == 0) continue;
        const int weight = sigma.sign_of_blade(k) * table.sign(j, k) * commutator;
        // (e_prod e_i) and (e_i e_prod) land on the same blade prod ^ e.
        acc[at(prod ^ e, std::min(j, k), std::max(j, k))] += weight;
      }

    GeneratorForms forms{i, {}};
    for (std::uint32_t blade = 0; blade < count; ++blade)
      for (std::uint32_t j = 0; j < count; ++j)
        for (std::uint32_t k = j; k < count; ++k)
          if (const auto c = acc[at(blade, j, k)]; c != 0) forms.terms.push_back({blade, j, k, c});
    cert.forms.push_back(std::move(forms));
  }
  const bool holds = cert.identically_zero();
  return {holds, std::move(cert)};
}

bool sample_cen2(const GradeNegationMap& sigma, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_multivector(sigma.signature(), rng, 9, 4);
    if (!is_central(cen2(a, sigma))) return false;
  }
  return true;
}

namespace {

std::uint64_t candidate_seed(std::uint64_t base, const Signature& sig, std::uint32_t pattern) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(sig.p()), static_cast<std::uint32_t>(sig.q()), pattern};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

CandidateResult evaluate(const Signature& sig, std::uint32_t pattern, const SearchOptions& opts) {
  const auto sigma = GradeNegationMap::from_pattern(sig, pattern);
  const auto cen2 = check_cen2(sigma);
  CandidateResult r{sigma,
                    check_cen1(sigma),
                    cen2.holds,
                    cen2.certificate.term_count(),
                    pattern ^ ((1u << (sig.n() + 1)) - 1),
                    std::nullopt};
  if (opts.samples > 0) r.sampled_cen2 = sample_cen2(sigma, opts.samples, candidate_seed(opts.seed, sig, pattern));
  return r;
}

}  // namespace

SearchReport search(const Signature& sig, const SearchOptions& opts) {
  const std::uint32_t total = 1u << (sig.n() + 1);
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
  threads = std::min<unsigned>(threads, total);

  std::vector<CandidateResult> results;
  results.reserve(total);
  if (threads <= 1) {
    for (std::uint32_t pattern = 0; pattern < total; ++pattern) results.push_back(evaluate(sig, pattern, opts));
  } else {
    std::vector<std::future<std::vector<CandidateResult>>> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.push_back(std::async(std::launch::async, [&, w] {
        std::vector<CandidateResult> part;
        for (std::uint32_t pattern = w; pattern < total; pattern += threads)
          part.push_back(evaluate(sig, pattern, opts));
        return part;
      }));
    for (auto& f : workers)
      for (auto& r : f.get()) results.push_back(std::move(r));
    std::sort(results.begin(), results.end(),
              [](const auto& x, const auto& y) { return x.sigma.pattern() < y.sigma.pattern(); });
  }

  SearchReport report{sig, total, {}, {}, {}, std::move(results), true};
  for (const auto& r : report.candidates) {
    if (r.cen1) report.cen1_only.push_back(r.sigma);
    if (r.cen2) report.cen2_holds.push_back(r.sigma);
    if (r.cen1 && r.cen2) report.both_centers.push_back(r.sigma);
    if (r.sampled_cen2 && *r.sampled_cen2 != r.cen2) report.sampling_agrees = false;
  }
  return report;
}

}  // namespace cliffsyl
