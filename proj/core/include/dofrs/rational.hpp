#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace dofrs {

/// Exact arbitrary-precision rational. Always held in lowest terms with a
/// positive denominator; every arithmetic operation is exact.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "p/q" or a plain decimal ("0.3" -> 3/10). Whitespace is not
/// accepted. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, else "p/q". Inverse of parse_rational on
/// its own output.
std::string to_string(const Rational& r);

/// max(r, 0) -- the positive-part operator used by the private-DoF caps.
Rational positive_part(const Rational& r);

/// Parses a comma-separated list of rationals ("9/10,3/10").
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace dofrs
