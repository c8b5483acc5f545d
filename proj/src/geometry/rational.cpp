#include "convexa/geometry/rational.hpp"

#include <cctype>

#include "convexa/errors.hpp"

namespace convexa {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  Rational value;
  const std::size_t slash = body.find('/');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational \"" + text + "\"");
    Rational d{boost::multiprecision::mpz_int(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
    value = Rational{boost::multiprecision::mpz_int(num)} / d;
  } else {
    long exponent = 0;
    const std::size_t e = body.find_first_of("eE");
    if (e != std::string::npos) {
      std::string exp = body.substr(e + 1);
      bool neg_exp = false;
      if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
        neg_exp = exp[0] == '-';
        exp = exp.substr(1);
      }
      if (!all_digits(exp) || exp.size() > 4) throw ParseError("malformed exponent in \"" + text + "\"");
      exponent = std::stol(exp) * (neg_exp ? -1 : 1);
      body = body.substr(0, e);
    }
    const std::size_t dot_pos = body.find('.');
    std::string int_part = body, frac_part;
    if (dot_pos != std::string::npos) {
      int_part = body.substr(0, dot_pos);
      frac_part = body.substr(dot_pos + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed rational \"" + text + "\"");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed rational \"" + text + "\"");
    }
    std::string digits = int_part + frac_part;
    value = Rational{boost::multiprecision::mpz_int(digits.empty() ? "0" : digits)};
    exponent -= static_cast<long>(frac_part.size());
    value = exponent >= 0 ? value * pow10(exponent) : value / pow10(-exponent);
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) { return q.str(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace convexa
