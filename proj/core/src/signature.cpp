#include "cliffsyl/signature.hpp"

#include <array>
#include <memory>

#include "cliffsyl/errors.hpp"

namespace cliffsyl {

Signature::Signature(int p, int q, int r) : p_(p), q_(q) {
  if (r != 0) throw InvalidSignature("degenerate signatures (r != 0) are not supported");
  if (p < 0 || q < 0) throw InvalidSignature("p and q must be non-negative");
  if (p + q < 1 || p + q > kMaxDimension)
    throw InvalidSignature("p+q must be in [1, " + std::to_string(kMaxDimension) + "], got " +
                           std::to_string(p + q));
}

int Signature::generator_square(int generator) const {
  if (generator < 1 || generator > n())
    throw std::out_of_range("generator index " + std::to_string(generator) + " outside 1.." +
                            std::to_string(n()));
  return generator <= p_ ? 1 : -1;
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::vector<Signature> Signature::all_of_dimension(int n) {
  std::vector<Signature> out;
  for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

std::string blade_name(BladeIndex b) {
  if (b.mask == 0) return "1";
  std::string s = "e";
  for (int i = 0; i < kMaxDimension; ++i)
    if (b.mask & (1u << i)) s += static_cast<char>('1' + i);
  return s;
}

BladeProduct blade_product(BladeIndex u, BladeIndex v, const Signature& sig) {
  // Each factor of v must move past every factor of u with a larger index.
  int swaps = 0;
  for (std::uint32_t a = u.mask >> 1; a != 0; a >>= 1) swaps += std::popcount(a & v.mask);
  const std::uint32_t negative_generators = ((1u << sig.n()) - 1) & ~((1u << sig.p()) - 1);
  swaps += std::popcount(u.mask & v.mask & negative_generators);
  return {(swaps & 1) ? -1 : 1, {u.mask ^ v.mask}};
}

BladeTable::BladeTable(const Signature& sig) : sig_(sig), signs_(sig.blade_count() * sig.blade_count()) {
  const std::uint32_t count = sig.blade_count();
  for (std::uint32_t u = 0; u < count; ++u)
    for (std::uint32_t v = 0; v < count; ++v)
      signs_[(u << sig.n()) | v] = static_cast<std::int8_t>(blade_product({u}, {v}, sig).sign);
}

namespace {

// Slot for Cl(p,q) with p+q <= kMaxDimension.
constexpr int slot(int p, int q) { return p * (kMaxDimension + 1) + q; }

using TableArray = std::array<std::unique_ptr<const BladeTable>, (kMaxDimension + 1) * (kMaxDimension + 1)>;

TableArray build_all_tables() {
  TableArray tables;
  for (int n = 1; n <= kMaxDimension; ++n)
    for (const auto& sig : Signature::all_of_dimension(n))
      tables[slot(sig.p(), sig.q())] = std::make_unique<const BladeTable>(sig);
  return tables;
}

}  // namespace

const BladeTable& blade_table(const Signature& sig) {
  static const TableArray tables = build_all_tables();
  return *tables[slot(sig.p(), sig.q())];
}

}  // namespace cliffsyl
