#include "nls/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "nls/errors.hpp"

namespace nls {

ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("exponent vectors have different lengths");
  }
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LaurentPolynomial::LaurentPolynomial(int dimension) : dimension_(dimension) {
  if (dimension < 0) throw DimensionError("negative dimension");
}

LaurentPolynomial LaurentPolynomial::zero(int dimension) {
  return LaurentPolynomial(dimension);
}

LaurentPolynomial LaurentPolynomial::constant(int dimension,
                                              const Rational& value) {
  LaurentPolynomial p(dimension);
  p.add_term(ExponentVector(dimension, 0), value);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector exponents,
                                              const Rational& coefficient) {
  LaurentPolynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coefficient);
  return p;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  for (auto c : e)
    if (c != 0) return false;
  return true;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponents) const {
  if (static_cast<int>(exponents.size()) != dimension_) {
    throw DimensionError("exponent vector length does not match dimension");
  }
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& exponents,
                                 const Rational& coefficient) {
  if (static_cast<int>(exponents.size()) != dimension_) {
    throw DimensionError("exponent vector length does not match dimension");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(dimension_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  if (dimension_ != rhs.dimension_) {
    throw DimensionError("polynomial dimensions differ");
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  if (dimension_ != rhs.dimension_) {
    throw DimensionError("polynomial dimensions differ");
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial lhs,
                            const LaurentPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPolynomial operator-(LaurentPolynomial lhs,
                            const LaurentPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs,
                            const LaurentPolynomial& rhs) {
  if (lhs.dimension_ != rhs.dimension_) {
    throw DimensionError("polynomial dimensions differ");
  }
  LaurentPolynomial out(lhs.dimension_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      out.add_term(exponent_add(ea, eb), ca * cb);
    }
  }
  return out;
}

LaurentPolynomial operator*(const Rational& scalar,
                            const LaurentPolynomial& poly) {
  LaurentPolynomial out(poly.dimension_);
  if (scalar == 0) return out;
  for (const auto& [e, c] : poly.terms_) out.terms_.emplace(e, scalar * c);
  return out;
}

LaurentPolynomial LaurentPolynomial::derivative(int axis) const {
  if (axis < 0 || axis >= dimension_) {
    throw DimensionError("derivative axis out of range");
  }
  LaurentPolynomial out(dimension_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    ExponentVector shifted = e;
    shifted[axis] -= 1;
    out.add_term(shifted, Rational(static_cast<long>(e[axis])) * c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    throw Error("negative power of a polynomial is not a polynomial");
  }
  LaurentPolynomial result = constant(dimension_, Rational(1));
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

std::optional<std::int64_t> LaurentPolynomial::total_degree() const {
  std::optional<std::int64_t> best;
  for (const auto& [e, c] : terms_) {
    std::int64_t sum = 0;
    for (auto x : e) sum += x;
    if (!best || sum > *best) best = sum;
  }
  return best;
}

LaurentPolynomial embed(const LaurentPolynomial& p, int new_dimension,
                        int axis_offset) {
  if (axis_offset < 0 || axis_offset + p.dimension() > new_dimension) {
    throw DimensionError("embedding window does not fit target dimension");
  }
  LaurentPolynomial out(new_dimension);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector wide(new_dimension, 0);
    for (int i = 0; i < p.dimension(); ++i) wide[axis_offset + i] = e[i];
    out.add_term(wide, c);
  }
  return out;
}

namespace {

// One monomial without its sign: "3/2*x^2*y" style, or "1" for a constant.
std::string monomial_body(const ExponentVector& e, const Rational& abs_coeff,
                          const std::vector<std::string>& variables) {
  std::ostringstream os;
  bool printed = false;
  bool all_zero = true;
  for (auto x : e)
    if (x != 0) all_zero = false;
  if (abs_coeff != 1 || all_zero) {
    os << to_string(abs_coeff);
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << variables[i];
    if (e[i] != 1) os << "^" << e[i];
    printed = true;
  }
  return os.str();
}

}  // namespace

std::string to_string(const LaurentPolynomial& p,
                      const std::vector<std::string>& variables) {
  if (static_cast<int>(variables.size()) != p.dimension()) {
    throw DimensionError("variable name count does not match dimension");
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    os << monomial_body(e, mag, variables);
    first = false;
  }
  return os.str();
}

}  // namespace nls
