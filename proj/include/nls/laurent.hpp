#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nls/rational.hpp"

namespace nls {

// Multi-exponent of a Laurent monomial; components may be negative.
using ExponentVector = std::vector<std::int64_t>;

ExponentVector exponent_add(const ExponentVector& a, const ExponentVector& b);

// Sparse multivariate Laurent polynomial over exact rationals.
//
// Canonical form: no zero coefficient is ever stored and terms sit in a
// map ordered lexicographically on the exponent vector, so two values are
// equal exactly when their term maps are equal.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(int dimension);

  static LaurentPolynomial zero(int dimension);
  static LaurentPolynomial constant(int dimension, const Rational& value);
  static LaurentPolynomial monomial(ExponentVector exponents,
                                    const Rational& coefficient);

  int dimension() const { return dimension_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }

  // Zero for absent exponents.
  Rational coefficient(const ExponentVector& exponents) const;

  // Accumulates a term, dropping it if the coefficient cancels to zero.
  void add_term(const ExponentVector& exponents, const Rational& coefficient);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial lhs,
                                     const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator-(LaurentPolynomial lhs,
                                     const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs,
                                     const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator*(const Rational& scalar,
                                     const LaurentPolynomial& poly);

  // Formal partial derivative along one axis; the Laurent rule applies,
  // so x^-1 differentiates to -x^-2 and exponent-zero terms vanish.
  LaurentPolynomial derivative(int axis) const;

  // Nonnegative powers only; use rational-expression machinery for the rest.
  LaurentPolynomial pow(std::int64_t exponent) const;

  // Maximum total degree (sum of exponent components) over the terms.
  // The zero polynomial reports nullopt, which std::optional orders below
  // every integer, exactly the sentinel the degree criterion needs.
  std::optional<std::int64_t> total_degree() const;

  bool operator==(const LaurentPolynomial& rhs) const = default;

 private:
  int dimension_;
  std::map<ExponentVector, Rational> terms_;
};

// Re-embeds p into a larger variable space, shifting its axes by offset.
LaurentPolynomial embed(const LaurentPolynomial& p, int new_dimension,
                        int axis_offset);

// Grammar-compatible rendering: terms in lexicographic exponent order,
// coefficients in lowest terms, exponents as x^k with k possibly negative.
std::string to_string(const LaurentPolynomial& p,
                      const std::vector<std::string>& variables);

}  // namespace nls
