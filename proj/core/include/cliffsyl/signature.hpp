#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cliffsyl {

inline constexpr int kMaxDimension = 6;

// Non-degenerate metric signature Cl(p,q): e_1..e_p square to +1,
// e_{p+1}..e_{p+q} square to -1.
class Signature {
 public:
  // r counts null generators; only r == 0 is supported.
  Signature(int p, int q, int r = 0);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  std::uint32_t blade_count() const noexcept { return 1u << n(); }
  std::uint32_t pseudoscalar_mask() const noexcept { return blade_count() - 1; }

  // +1 or -1; generator is 1-indexed as in e_1.
  int generator_square(int generator) const;

  std::string to_string() const;  // "Cl(p,q)"

  auto operator<=>(const Signature&) const = default;

  // All non-degenerate signatures of dimension n, ordered by descending p.
  static std::vector<Signature> all_of_dimension(int n);

 private:
  int p_;
  int q_;
};

// Canonical basis blade: bit (i-1) set iff e_i is a factor, factors in
// ascending order.
struct BladeIndex {
  std::uint32_t mask = 0;

  constexpr int grade() const noexcept { return std::popcount(mask); }
  static constexpr BladeIndex scalar() { return {0}; }
  static BladeIndex pseudoscalar(const Signature& sig) { return {sig.pseudoscalar_mask()}; }
  // e_i, 1-indexed.
  static constexpr BladeIndex generator(int i) { return {1u << (i - 1)}; }

  auto operator<=>(const BladeIndex&) const = default;
};

// "1", "e1", "e13", ...
std::string blade_name(BladeIndex b);

struct BladeProduct {
  int sign;  // +1 or -1
  BladeIndex result;
};

// u * v for basis blades: XOR of masks, sign from reordering parity and the
// squares of shared generators.
BladeProduct blade_product(BladeIndex u, BladeIndex v, const Signature& sig);

// Precomputed 2^n x 2^n sign table for one signature.
class BladeTable {
 public:
  explicit BladeTable(const Signature& sig);

  const Signature& signature() const noexcept { return sig_; }
  int sign(std::uint32_t u, std::uint32_t v) const noexcept { return signs_[(u << sig_.n()) | v]; }

 private:
  Signature sig_;
  std::vector<std::int8_t> signs_;
};

// Shared immutable table; built once per signature.
const BladeTable& blade_table(const Signature& sig);

}  // namespace cliffsyl
