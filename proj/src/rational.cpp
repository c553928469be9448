#include "nls/rational.hpp"

#include <cctype>
#include <cstddef>

#include "nls/errors.hpp"

namespace nls {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos)
    throw Error("empty string is not a rational");
  std::string s = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }

  // Scientific notation (as emitted by %.17g) scales by a power of ten.
  long exponent10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string tail = s.substr(e + 1);
    s.erase(e);
    bool exp_negative = false;
    if (!tail.empty() && (tail[0] == '+' || tail[0] == '-')) {
      exp_negative = tail[0] == '-';
      tail.erase(0, 1);
    }
    if (!all_digits(tail) || tail.size() > 6)
      throw Error("malformed exponent in '" + text + "'");
    exponent10 = std::stol(tail);
    if (exp_negative) exponent10 = -exponent10;
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0) throw Error("rational with zero denominator: '" + text + "'");
    value = Rational(Integer(num), d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw Error("malformed number '" + text + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(Integer(whole) * scale + Integer(frac.empty() ? "0" : frac),
                     scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw Error("malformed integer '" + text + "'");
    value = Rational(Integer(s));
  }
  if (exponent10 != 0) {
    Integer scale = 1;
    for (long i = 0; i < (exponent10 < 0 ? -exponent10 : exponent10); ++i) {
      scale *= 10;
    }
    if (exponent10 > 0) {
      value *= Rational(scale);
    } else {
      value /= Rational(scale);
    }
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace nls
