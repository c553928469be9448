#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "nls/rational.hpp"

namespace nls::ast {

enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable expression tree node. Number uses `value`; Variable uses `name`;
// Neg and Pow use only `left` (Pow keeps its integer exponent inline, the
// grammar does not allow arbitrary expressions in exponents).
struct Node {
  Kind kind;
  Rational value;
  std::string name;
  NodePtr left;
  NodePtr right;
  std::int64_t exponent = 0;
};

NodePtr number(const Rational& v);
NodePtr variable(std::string name);
NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs);
NodePtr negate(NodePtr operand);
NodePtr power(NodePtr base, std::int64_t exponent);

// Recursive-descent parser for the shared grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' ['-'] integer)*
//   primary:= integer | identifier | '(' expr ')'
// Whitespace is insignificant; implicit multiplication is a syntax error.
// Errors carry 1-based line/column positions.
NodePtr parse(const std::string& text);

// Deterministic rendering with minimal parentheses; reparses to an equal tree.
std::string to_string(const NodePtr& node);

}  // namespace nls::ast
