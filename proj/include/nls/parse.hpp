#pragma once

#include <string>
#include <vector>

#include "nls/expr_ast.hpp"
#include "nls/laurent.hpp"

namespace nls {

// Parses text over the declared variables into canonical sparse form.
// Division is only accepted where the divisor folds to a nonzero constant,
// and negative exponents are rejected unless allow_laurent is set.
LaurentPolynomial parse_polynomial(const std::string& text,
                                   const std::vector<std::string>& variables,
                                   bool allow_laurent = false);

// AST-to-polynomial lowering used by parse_polynomial; exposed so callers
// holding a tree (e.g. rational-expression plumbing) can reuse it.
LaurentPolynomial lower_polynomial(const ast::NodePtr& node,
                                   const std::vector<std::string>& variables,
                                   bool allow_laurent);

// Numerator/denominator pair of Laurent polynomials. Not reduced:
// zero-testing numerators is exact without rational-function normal forms.
struct FractionParts {
  LaurentPolynomial numerator;
  LaurentPolynomial denominator;
};

// Lowers a tree to a fraction of polynomials over the declared variables.
// Divisors must be expressions that are not identically zero.
FractionParts lower_fraction(const ast::NodePtr& node,
                             const std::vector<std::string>& variables);

}  // namespace nls
