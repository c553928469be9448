#include "nls/parse.hpp"

#include <cstdint>
#include <optional>

#include "nls/errors.hpp"

namespace nls {

namespace {

int axis_of(const std::string& name, const std::vector<std::string>& variables) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == name) return static_cast<int>(i);
  }
  throw ParseError("unknown variable '" + name + "'");
}

std::optional<Rational> as_constant(const LaurentPolynomial& p) {
  if (!p.is_constant()) return std::nullopt;
  return p.coefficient(ExponentVector(p.dimension(), 0));
}

}  // namespace

LaurentPolynomial lower_polynomial(const ast::NodePtr& node,
                                   const std::vector<std::string>& variables,
                                   bool allow_laurent) {
  const int d = static_cast<int>(variables.size());
  switch (node->kind) {
    case ast::Kind::Number:
      return LaurentPolynomial::constant(d, node->value);
    case ast::Kind::Variable: {
      ExponentVector e(d, 0);
      e[axis_of(node->name, variables)] = 1;
      return LaurentPolynomial::monomial(e, Rational(1));
    }
    case ast::Kind::Add:
      return lower_polynomial(node->left, variables, allow_laurent) +
             lower_polynomial(node->right, variables, allow_laurent);
    case ast::Kind::Sub:
      return lower_polynomial(node->left, variables, allow_laurent) -
             lower_polynomial(node->right, variables, allow_laurent);
    case ast::Kind::Mul:
      return lower_polynomial(node->left, variables, allow_laurent) *
             lower_polynomial(node->right, variables, allow_laurent);
    case ast::Kind::Div: {
      LaurentPolynomial divisor =
          lower_polynomial(node->right, variables, allow_laurent);
      std::optional<Rational> c = as_constant(divisor);
      if (!c) {
        throw ParseError("division by the non-constant expression '" +
                         ast::to_string(node->right) + "'");
      }
      if (*c == 0) {
        throw ParseError("division by zero in '" + ast::to_string(node) + "'");
      }
      return Rational(1 / *c) *
             lower_polynomial(node->left, variables, allow_laurent);
    }
    case ast::Kind::Neg:
      return -lower_polynomial(node->left, variables, allow_laurent);
    case ast::Kind::Pow: {
      LaurentPolynomial base =
          lower_polynomial(node->left, variables, allow_laurent);
      std::int64_t e = node->exponent;
      if (e >= 0) return base.pow(e);
      if (base.is_zero()) {
        throw ParseError("zero raised to a negative power in '" +
                         ast::to_string(node) + "'");
      }
      if (base.term_count() != 1) {
        throw ParseError(
            "negative power of a non-monomial expression in '" +
            ast::to_string(node) + "'");
      }
      const auto& [exp, coeff] = *base.terms().begin();
      ExponentVector inv(exp.size());
      for (std::size_t i = 0; i < exp.size(); ++i) inv[i] = exp[i] * e;
      Rational c(1);
      for (std::int64_t k = 0; k < -e; ++k) c /= coeff;
      return LaurentPolynomial::monomial(inv, c);
    }
  }
  throw Error("malformed expression tree");
}

LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables,
                                   bool allow_laurent) {
  LaurentPolynomial p =
      lower_polynomial(ast::parse(text), variables, allow_laurent);
  if (!allow_laurent) {
    for (const auto& [e, c] : p.terms()) {
      for (auto component : e) {
        if (component < 0) {
          throw ParseError(
              "negative exponents in '" + text +
              "' require the document to set allow_laurent");
        }
      }
    }
  }
  return p;
}

FractionParts lower_fraction(const ast::NodePtr& node,
                             const std::vector<std::string>& variables) {
  const int d = static_cast<int>(variables.size());
  const LaurentPolynomial one = LaurentPolynomial::constant(d, Rational(1));
  switch (node->kind) {
    case ast::Kind::Number:
      return {LaurentPolynomial::constant(d, node->value), one};
    case ast::Kind::Variable: {
      ExponentVector e(d, 0);
      e[axis_of(node->name, variables)] = 1;
      return {LaurentPolynomial::monomial(e, Rational(1)), one};
    }
    case ast::Kind::Add: {
      FractionParts a = lower_fraction(node->left, variables);
      FractionParts b = lower_fraction(node->right, variables);
      return {a.numerator * b.denominator + b.numerator * a.denominator,
              a.denominator * b.denominator};
    }
    case ast::Kind::Sub: {
      FractionParts a = lower_fraction(node->left, variables);
      FractionParts b = lower_fraction(node->right, variables);
      return {a.numerator * b.denominator - b.numerator * a.denominator,
              a.denominator * b.denominator};
    }
    case ast::Kind::Mul: {
      FractionParts a = lower_fraction(node->left, variables);
      FractionParts b = lower_fraction(node->right, variables);
      return {a.numerator * b.numerator, a.denominator * b.denominator};
    }
    case ast::Kind::Div: {
      FractionParts a = lower_fraction(node->left, variables);
      FractionParts b = lower_fraction(node->right, variables);
      if (b.numerator.is_zero()) {
        throw ParseError("division by the identically zero expression '" +
                         ast::to_string(node->right) + "'");
      }
      return {a.numerator * b.denominator, a.denominator * b.numerator};
    }
    case ast::Kind::Neg: {
      FractionParts a = lower_fraction(node->left, variables);
      return {-a.numerator, a.denominator};
    }
    case ast::Kind::Pow: {
      FractionParts a = lower_fraction(node->left, variables);
      std::int64_t e = node->exponent;
      if (e >= 0) return {a.numerator.pow(e), a.denominator.pow(e)};
      if (a.numerator.is_zero()) {
        throw ParseError(
            "identically zero expression raised to a negative power in '" +
            ast::to_string(node) + "'");
      }
      return {a.denominator.pow(-e), a.numerator.pow(-e)};
    }
  }
  throw Error("malformed expression tree");
}

}  // namespace nls
