#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace convexa {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;

// Accepts "p/q", "p", and finite decimals such as "-6.9" or "1e-3".
// Throws ParseError.
Rational parse_rational(const std::string& text);
// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace convexa
