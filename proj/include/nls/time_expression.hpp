#pragma once

#include <string>

#include "nls/expr_ast.hpp"
#include "nls/rational.hpp"

namespace nls {

// Univariate rational expression in the time variable t, evaluated exactly.
class TimeExpression {
 public:
  // Constant expression.
  TimeExpression();
  explicit TimeExpression(const Rational& constant);
  explicit TimeExpression(ast::NodePtr tree);

  // Accepts the shared grammar restricted to the single variable t.
  static TimeExpression parse(const std::string& text);

  // Exact evaluation; a vanishing divisor raises an error that names the
  // offending subexpression.
  Rational eval(const Rational& t) const;

  bool is_constant() const;
  std::string str() const;
  const ast::NodePtr& tree() const { return tree_; }

 private:
  ast::NodePtr tree_;
};

}  // namespace nls
