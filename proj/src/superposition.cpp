#include "nls/superposition.hpp"

#include <utility>

#include "nls/errors.hpp"

namespace nls {

namespace {

template <typename S>
S cross_ratio_impl(const S& x1, const S& x2, const S& x3, const S& x4) {
  if (x1 == x2) throw Error("degenerate cross-ratio: x1 = x2");
  if (x2 == x3) throw Error("degenerate cross-ratio: x2 = x3");
  if (x4 == x3) throw Error("degenerate cross-ratio: x4 = x3");
  return ((x4 - x1) / (x1 - x2)) / ((x4 - x3) / (x2 - x3));
}

template <typename S>
S superpose_impl(const S& x1, const S& x2, const S& x3, const S& c) {
  S denominator = c * (x1 - x2) + x3 - x2;
  if (denominator == 0) {
    throw Error(
        "degenerate solution configuration: C*(x1 - x2) + x3 - x2 = 0");
  }
  return (c * (x1 * x3 - x2 * x3) + x1 * x3 - x1 * x2) / denominator;
}

}  // namespace

Rational cross_ratio(const Rational& x1, const Rational& x2,
                     const Rational& x3, const Rational& x4) {
  return cross_ratio_impl(x1, x2, x3, x4);
}

double cross_ratio(double x1, double x2, double x3, double x4) {
  return cross_ratio_impl(x1, x2, x3, x4);
}

Rational riccati_superpose(const Rational& x1, const Rational& x2,
                           const Rational& x3, const Rational& c) {
  return superpose_impl(x1, x2, x3, c);
}

double riccati_superpose(double x1, double x2, double x3, double c) {
  return superpose_impl(x1, x2, x3, c);
}

RationalExpression::RationalExpression(LaurentPolynomial numerator,
                                       LaurentPolynomial denominator,
                                       std::vector<std::string> variables)
    : numerator_(std::move(numerator)),
      denominator_(std::move(denominator)),
      variables_(std::move(variables)) {
  if (numerator_.dimension() != denominator_.dimension() ||
      numerator_.dimension() != static_cast<int>(variables_.size())) {
    throw DimensionError("fraction parts and variable list disagree");
  }
  if (denominator_.is_zero()) {
    throw Error("identically zero denominator");
  }
}

RationalExpression RationalExpression::parse(
    const std::string& text, const std::vector<std::string>& variables) {
  FractionParts parts = lower_fraction(ast::parse(text), variables);
  return RationalExpression(std::move(parts.numerator),
                            std::move(parts.denominator), variables);
}

std::string RationalExpression::str() const {
  if (denominator_.is_constant() &&
      denominator_.coefficient(ExponentVector(dimension(), 0)) == 1) {
    return to_string(numerator_, variables_);
  }
  return "(" + to_string(numerator_, variables_) + ") / (" +
         to_string(denominator_, variables_) + ")";
}

RuleCheck verify_rule(const RationalExpression& candidate,
                      const std::vector<VectorField>& generators, int copies) {
  if (copies < 1) throw Error("rule verification needs at least one copy");
  RuleCheck out;
  out.pass = true;
  for (const auto& g : generators) {
    if (g.dimension() != 1) {
      throw DimensionError(
          "rule verification expects one-dimensional generators");
    }
    VectorField big = prolong(g, copies);
    if (big.dimension() != candidate.dimension()) {
      throw DimensionError(
          "candidate variable count does not match the prolonged space (" +
          std::to_string(copies + 1) + " variables expected)");
    }
    const LaurentPolynomial& n = candidate.numerator();
    const LaurentPolynomial& d = candidate.denominator();
    LaurentPolynomial residual = apply(big, n) * d - n * apply(big, d);
    if (!residual.is_zero()) out.pass = false;
    out.residual_numerators.push_back(std::move(residual));
  }
  return out;
}

}  // namespace nls
