#include "cliffsyl/scalar.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace cliffsyl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Splits an optionally signed numeral into sign and body.
std::pair<bool, std::string_view> split_sign(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    return {text.front() == '-', text.substr(1)};
  return {false, text};
}

}  // namespace

std::string ScalarTraits<double>::to_string(double x) {
  // Fixed notation keeps the output inside the literal grammar (no exponent).
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, end);
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  auto [negative, body] = split_sign(text);
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
    value.canonicalize();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(std::string(whole) + std::string(frac)), scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

template <>
double parse_scalar<double>(std::string_view text) {
  auto [negative, body] = split_sign(text);
  double value = 0.0;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    double n = 0.0, d = 0.0;
    std::from_chars(num.data(), num.data() + num.size(), n);
    std::from_chars(den.data(), den.data() + den.size(), d);
    if (d == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = n / d;
  } else {
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value,
                                     std::chars_format::general);
    if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() ||
        body.front() == '-' || body.front() == '+')
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return negative ? -value : value;
}

}  // namespace cliffsyl
