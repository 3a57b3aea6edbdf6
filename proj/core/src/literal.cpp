#include "cliffsyl/literal.hpp"

#include <cctype>
#include <vector>

namespace cliffsyl {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  template <class T>
  Multivector<T> parse() {
    std::vector<T> coeffs(sig_.blade_count(), T(0));
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term<T>(coeffs, negative);
    for (skip_space(); pos_ < text_.size(); skip_space()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term<T>(coeffs, op == '-');
    }
    return {sig_, std::move(coeffs)};
  }

  BladeIndex parse_blade_only() {
    if (text_ == "1") return BladeIndex::scalar();
    const BladeIndex b = parse_blade();
    if (pos_ != text_.size()) fail("trailing characters after blade");
    return b;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  template <class T>
  void parse_term(std::vector<T>& coeffs, bool negative) {
    skip_space();
    T coeff(1);
    std::uint32_t mask = 0;
    if (is_digit(peek())) {
      coeff = parse_coeff<T>();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'e') fail("expected blade after '*'");
      }
      if (peek() == 'e') mask = parse_blade().mask;
    } else if (peek() == 'e') {
      mask = parse_blade().mask;
    } else {
      fail(pos_ == text_.size() ? "unexpected end of input" : "expected coefficient or blade");
    }
    if (negative)
      coeffs[mask] -= coeff;
    else
      coeffs[mask] += coeff;
  }

  template <class T>
  T parse_coeff() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (is_digit(peek())) ++pos_;
      if (pos_ == from) fail("expected digits");
    };
    digits();
    if (peek() == '/' || peek() == '.') {
      ++pos_;
      digits();
    }
    try {
      return parse_scalar<T>(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  BladeIndex parse_blade() {
    if (peek() != 'e') fail("expected 'e'");
    ++pos_;
    if (!is_digit(peek())) fail("expected generator index after 'e'");
    std::uint32_t mask = 0;
    int last = 0;
    while (is_digit(peek())) {
      const int index = peek() - '0';
      if (index < 1 || index > sig_.n())
        fail("generator e" + std::to_string(index) + " outside 1.." + std::to_string(sig_.n()) + " for " +
             sig_.to_string());
      if (index == last) fail("repeated generator index " + std::to_string(index));
      if (index < last) fail("generator indices must be strictly ascending");
      mask |= 1u << (index - 1);
      last = index;
      ++pos_;
    }
    return {mask};
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class T>
Multivector<T> parse_multivector(std::string_view text, const Signature& sig) {
  return LiteralParser(text, sig).parse<T>();
}

BladeIndex parse_blade_name(std::string_view text, const Signature& sig) {
  return LiteralParser(text, sig).parse_blade_only();
}

template <class T>
std::string format_multivector(const Multivector<T>& a) {
  std::string out;
  for (std::uint32_t m = 0; m < a.size(); ++m) {
    const T& c = a[m];
    if (ScalarTraits<T>::is_zero(c)) continue;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const T magnitude = negative ? T(-c) : c;
    if (m == 0) {
      out += ScalarTraits<T>::to_string(magnitude);
    } else {
      if (magnitude != T(1)) out += ScalarTraits<T>::to_string(magnitude) + "*";
      out += blade_name({m});
    }
  }
  return out.empty() ? "0" : out;
}

template Multivector<Rational> parse_multivector(std::string_view, const Signature&);
template Multivector<double> parse_multivector(std::string_view, const Signature&);
template std::string format_multivector(const Multivector<Rational>&);
template std::string format_multivector(const Multivector<double>&);

}  // namespace cliffsyl
