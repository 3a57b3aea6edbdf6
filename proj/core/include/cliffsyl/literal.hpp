#pragma once

#include <string>
#include <string_view>

#include "cliffsyl/multivector.hpp"

namespace cliffsyl {

// Multivector literal grammar:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*'] [blade] | blade
//   coeff := integer | integer '/' integer | integer '.' digits
//   blade := 'e' digit+        -- digits strictly ascending, each in 1..n
// Whitespace between tokens is ignored; repeated blades accumulate.
// Throws ParseError with the offending position.
template <class T>
Multivector<T> parse_multivector(std::string_view text, const Signature& sig);

// Parses a single blade name ("1", "e1", "e123") as used in JSON objects.
BladeIndex parse_blade_name(std::string_view text, const Signature& sig);

// Text form: ascending blade mask, zero coefficients omitted,
// e.g. "359677/2177719 + 601305/2177719*e1 - 155957/2177719*e2". Accepted
// by parse_multivector.
template <class T>
std::string format_multivector(const Multivector<T>& a);

extern template Multivector<Rational> parse_multivector(std::string_view, const Signature&);
extern template Multivector<double> parse_multivector(std::string_view, const Signature&);
extern template std::string format_multivector(const Multivector<Rational>&);
extern template std::string format_multivector(const Multivector<double>&);

}  // namespace cliffsyl
