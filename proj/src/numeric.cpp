#include "inflap/numeric.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace inflap {

namespace {

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  return Rational(mpz_class(1), p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex kDecimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kFraction)) {
    mpz_class num(m[1].str(), 10);
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, kDecimal)) {
    const std::string whole = m[2].str();
    const std::string frac = m[3].matched ? m[3].str() : std::string();
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("not a number: '" + s + "'");
    }
    mpz_class digits(whole + frac == "" ? "0" : whole + frac, 10);
    long exponent = -static_cast<long>(frac.size());
    if (m[4].matched) exponent += std::stol(m[4].str());
    Rational q = Rational(digits) * pow10(exponent);
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    return q;
  }
  throw std::invalid_argument("not a rational number: '" + s + "'");
}

std::string format_rational(const Rational& x) {
  Rational q = x;
  q.canonicalize();
  return q.get_str();
}

}  // namespace inflap
