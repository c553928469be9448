#pragma once

#include <string>
#include <vector>

#include "nls/laurent.hpp"
#include "nls/parse.hpp"
#include "nls/rational.hpp"
#include "nls/vector_field.hpp"

namespace nls {

// ((x4-x1)/(x1-x2)) / ((x4-x3)/(x2-x3)); errors name the coincident pair
// that collapses a denominator.
Rational cross_ratio(const Rational& x1, const Rational& x2,
                     const Rational& x3, const Rational& x4);
double cross_ratio(double x1, double x2, double x3, double x4);

// Fourth solution from three known ones and the constant C:
//   (C(x1*x3 - x2*x3) + x1*x3 - x1*x2) / (C(x1 - x2) + x3 - x2).
// The result satisfies cross_ratio(x1, x2, x3, result) == C exactly.
Rational riccati_superpose(const Rational& x1, const Rational& x2,
                           const Rational& x3, const Rational& c);
double riccati_superpose(double x1, double x2, double x3, double c);

// Quotient of polynomials over a declared variable list, kept as a raw
// numerator/denominator pair (never reduced).
class RationalExpression {
 public:
  RationalExpression(LaurentPolynomial numerator, LaurentPolynomial denominator,
                     std::vector<std::string> variables);

  static RationalExpression parse(const std::string& text,
                                  const std::vector<std::string>& variables);

  const LaurentPolynomial& numerator() const { return numerator_; }
  const LaurentPolynomial& denominator() const { return denominator_; }
  const std::vector<std::string>& variables() const { return variables_; }
  int dimension() const { return numerator_.dimension(); }

  std::string str() const;

 private:
  LaurentPolynomial numerator_;
  LaurentPolynomial denominator_;
  std::vector<std::string> variables_;
};

// Outcome of testing whether every listed operator annihilates a candidate
// invariant: one residual numerator per operator, all identically zero on
// success.
struct RuleCheck {
  bool pass = false;
  std::vector<LaurentPolynomial> residual_numerators;
};

// Applies each one-dimensional generator, prolonged onto `copies` solution
// copies, to the candidate as a rational expression. Differentiation uses
// the quotient rule on the (numerator, denominator) pair and only the
// resulting numerator X(N)*D - N*X(D) is zero-tested, so no normal forms or
// GCDs are needed.
RuleCheck verify_rule(const RationalExpression& candidate,
                      const std::vector<VectorField>& generators, int copies);

}  // namespace nls
