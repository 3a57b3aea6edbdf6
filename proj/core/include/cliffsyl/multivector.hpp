#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "cliffsyl/errors.hpp"
#include "cliffsyl/scalar.hpp"
#include "cliffsyl/signature.hpp"

namespace cliffsyl {

// Dense element of Cl(p,q): one coefficient per canonical blade, indexed by
// blade mask. T is Rational or double.
template <class T>
class Multivector {
 public:
  using Scalar = T;

  explicit Multivector(const Signature& sig) : sig_(sig), coeffs_(sig.blade_count(), T(0)) {}

  Multivector(const Signature& sig, std::vector<T> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count())
      throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) +
                                  " does not match 2^n = " + std::to_string(sig_.blade_count()));
  }

  // Sparse construction: {{mask, value}, ...}; repeated masks accumulate.
  static Multivector from_terms(const Signature& sig,
                                std::initializer_list<std::pair<std::uint32_t, T>> terms) {
    Multivector m(sig);
    for (const auto& [mask, value] : terms) {
      if (mask >= sig.blade_count()) throw std::out_of_range("blade mask out of range");
      m.coeffs_[mask] += value;
    }
    return m;
  }

  static Multivector scalar(const Signature& sig, const T& value) {
    Multivector m(sig);
    m.coeffs_[0] = value;
    return m;
  }

  static Multivector blade(const Signature& sig, BladeIndex b, const T& value = T(1)) {
    if (b.mask >= sig.blade_count()) throw std::out_of_range("blade mask out of range");
    Multivector m(sig);
    m.coeffs_[b.mask] = value;
    return m;
  }

  // e_i, 1-indexed.
  static Multivector generator(const Signature& sig, int i) {
    if (i < 1 || i > sig.n()) throw std::out_of_range("generator index out of range");
    return blade(sig, BladeIndex::generator(i));
  }

  const Signature& signature() const noexcept { return sig_; }
  std::span<const T> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const T& operator[](std::uint32_t mask) const { return coeffs_.at(mask); }
  const T& operator[](BladeIndex b) const { return coeffs_.at(b.mask); }

  // Copy with one coefficient replaced.
  Multivector with(BladeIndex b, const T& value) const {
    Multivector m = *this;
    m.coeffs_.at(b.mask) = value;
    return m;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!ScalarTraits<T>::is_zero(c)) return false;
    return true;
  }

  // True iff all non-scalar coefficients vanish.
  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!ScalarTraits<T>::is_zero(coeffs_[i])) return false;
    return true;
  }

  Multivector grade_part(int k) const {
    if (k < 0 || k > sig_.n())
      throw GradeOutOfRange("grade " + std::to_string(k) + " outside 0.." + std::to_string(sig_.n()));
    Multivector out(sig_);
    for (std::uint32_t m = 0; m < coeffs_.size(); ++m)
      if (std::popcount(m) == k) out.coeffs_[m] = coeffs_[m];
    return out;
  }

  Multivector operator-() const {
    Multivector out(sig_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_signature(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    require_same_signature(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Multivector& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  Multivector& operator/=(const T& s) {
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, const T& s) { return a /= s; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same_signature(b);
    const BladeTable& table = blade_table(a.sig_);
    const std::uint32_t count = a.sig_.blade_count();
    Multivector out(a.sig_);
    T term;
    for (std::uint32_t u = 0; u < count; ++u) {
      if (ScalarTraits<T>::is_zero(a.coeffs_[u])) continue;
      for (std::uint32_t v = 0; v < count; ++v) {
        if (ScalarTraits<T>::is_zero(b.coeffs_[v])) continue;
        term = a.coeffs_[u] * b.coeffs_[v];
        if (table.sign(u, v) > 0)
          out.coeffs_[u ^ v] += term;
        else
          out.coeffs_[u ^ v] -= term;
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  void require_same_signature(const Multivector& o) const {
    if (sig_ != o.sig_)
      throw SignatureMismatch("cannot combine " + sig_.to_string() + " with " + o.sig_.to_string());
  }

 private:
  Signature sig_;
  std::vector<T> coeffs_;
};

// Free-function spellings of the operators.
template <class T>
Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) {
  return a * b;
}

template <class T>
Multivector<T> grade_part(const Multivector<T>& a, int k) {
  return a.grade_part(k);
}

// Coefficient 2-norm, in double precision.
template <class T>
double norm2(const Multivector<T>& a) {
  double s = 0.0;
  for (const auto& c : a.coeffs()) {
    const double d = ScalarTraits<T>::to_double(c);
    s += d * d;
  }
  return std::sqrt(s);
}

template <class T>
double max_abs(const Multivector<T>& a) {
  double m = 0.0;
  for (const auto& c : a.coeffs()) m = std::max(m, std::fabs(ScalarTraits<T>::to_double(c)));
  return m;
}

// Exact-to-float conversion, used for cross-checking the two scalar fields.
inline Multivector<double> to_float(const Multivector<Rational>& a) {
  std::vector<double> c;
  c.reserve(a.size());
  for (const auto& x : a.coeffs()) c.push_back(x.get_d());
  return {a.signature(), std::move(c)};
}

}  // namespace cliffsyl
