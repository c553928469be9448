#include "nls/time_expression.hpp"

#include "nls/errors.hpp"

namespace nls {

namespace {

void check_variables(const ast::NodePtr& n) {
  if (!n) return;
  if (n->kind == ast::Kind::Variable && n->name != "t") {
    throw ParseError("unknown variable '" + n->name +
                     "' (time expressions may only use t)");
  }
  check_variables(n->left);
  check_variables(n->right);
}

bool constant_tree(const ast::NodePtr& n) {
  if (!n) return true;
  if (n->kind == ast::Kind::Variable) return false;
  return constant_tree(n->left) && constant_tree(n->right);
}

Rational eval_node(const ast::NodePtr& n, const Rational& t) {
  switch (n->kind) {
    case ast::Kind::Number:
      return n->value;
    case ast::Kind::Variable:
      return t;
    case ast::Kind::Add:
      return eval_node(n->left, t) + eval_node(n->right, t);
    case ast::Kind::Sub:
      return eval_node(n->left, t) - eval_node(n->right, t);
    case ast::Kind::Mul:
      return eval_node(n->left, t) * eval_node(n->right, t);
    case ast::Kind::Div: {
      Rational denom = eval_node(n->right, t);
      if (denom == 0) {
        throw Error("division by zero in '" + ast::to_string(n) + "'");
      }
      return eval_node(n->left, t) / denom;
    }
    case ast::Kind::Neg:
      return -eval_node(n->left, t);
    case ast::Kind::Pow: {
      Rational base = eval_node(n->left, t);
      std::int64_t e = n->exponent;
      if (e < 0) {
        if (base == 0) {
          throw Error("division by zero in '" + ast::to_string(n) + "'");
        }
        base = 1 / base;
        e = -e;
      }
      Rational out(1);
      while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
      }
      return out;
    }
  }
  throw Error("malformed expression tree");
}

}  // namespace

TimeExpression::TimeExpression() : tree_(ast::number(Rational(0))) {}

TimeExpression::TimeExpression(const Rational& constant)
    : tree_(ast::number(constant)) {}

TimeExpression::TimeExpression(ast::NodePtr tree) : tree_(std::move(tree)) {
  check_variables(tree_);
}

TimeExpression TimeExpression::parse(const std::string& text) {
  return TimeExpression(ast::parse(text));
}

Rational TimeExpression::eval(const Rational& t) const {
  return eval_node(tree_, t);
}

bool TimeExpression::is_constant() const { return constant_tree(tree_); }

std::string TimeExpression::str() const { return ast::to_string(tree_); }

}  // namespace nls
