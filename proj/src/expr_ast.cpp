#include "nls/expr_ast.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "nls/errors.hpp"

namespace nls::ast {

NodePtr number(const Rational& v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = v;
  return n;
}

NodePtr variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return n;
}

NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return n;
}

NodePtr negate(NodePtr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->left = std::move(operand);
  return n;
}

NodePtr power(NodePtr base, std::int64_t exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->left = std::move(base);
  n->exponent = exponent;
  return n;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      int line = line_;
      int column = column_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          digits.push_back(text_[pos_]);
          advance();
        }
        out.push_back({Tok::Number, digits, line, column});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string ident;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          ident.push_back(text_[pos_]);
          advance();
        }
        out.push_back({Tok::Ident, ident, line, column});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, column);
      }
      out.push_back({kind, std::string(1, c), line, column});
      advance();
    }
    out.push_back({Tok::End, "", line_, column_});
    return out;
  }

 private:
  void advance() {
    ++pos_;
    ++column_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  NodePtr run() {
    NodePtr e = expr();
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }

  Token take() { return tokens_[index_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept(Tok::Plus)) {
        lhs = binary(Kind::Add, std::move(lhs), term());
      } else if (accept(Tok::Minus)) {
        lhs = binary(Kind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (accept(Tok::Star)) {
        lhs = binary(Kind::Mul, std::move(lhs), factor());
      } else if (accept(Tok::Slash)) {
        lhs = binary(Kind::Div, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (accept(Tok::Minus)) return negate(factor());
    return powerExpr();
  }

  NodePtr powerExpr() {
    NodePtr base = primary();
    while (accept(Tok::Caret)) {
      bool neg = accept(Tok::Minus);
      if (peek().kind != Tok::Number) {
        fail("expected integer exponent after '^', found " + describe(peek()));
      }
      Token digits = take();
      std::int64_t e;
      try {
        e = std::stoll(digits.text);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", digits.line, digits.column);
      }
      base = power(std::move(base), neg ? -e : e);
    }
    return base;
  }

  NodePtr primary() {
    if (peek().kind == Tok::Number) {
      Token t = take();
      return number(Rational(Integer(t.text, 10)));
    }
    if (peek().kind == Tok::Ident) {
      Token t = take();
      return variable(t.text);
    }
    if (accept(Tok::LParen)) {
      NodePtr inner = expr();
      if (!accept(Tok::RParen)) {
        fail("expected ')', found " + describe(peek()));
      }
      return inner;
    }
    fail("expected a number, variable, or '(', found " + describe(peek()));
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// Precedence levels used when deciding where parentheses are required.
int level(const NodePtr& n) {
  switch (n->kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    case Kind::Number:
      if (n->value < 0) return 3;                 // prints with a leading '-'
      if (n->value.get_den() != 1) return 2;      // prints as p/q
      return 5;
    case Kind::Variable:
      return 5;
  }
  return 5;
}

void render(const NodePtr& n, std::ostringstream& os);

void child(const NodePtr& c, int min_level, std::ostringstream& os) {
  if (level(c) < min_level) {
    os << "(";
    render(c, os);
    os << ")";
  } else {
    render(c, os);
  }
}

void render(const NodePtr& n, std::ostringstream& os) {
  switch (n->kind) {
    case Kind::Number:
      os << nls::to_string(n->value);
      return;
    case Kind::Variable:
      os << n->name;
      return;
    case Kind::Add:
      child(n->left, 1, os);
      os << " + ";
      child(n->right, 2, os);
      return;
    case Kind::Sub:
      child(n->left, 1, os);
      os << " - ";
      child(n->right, 2, os);
      return;
    case Kind::Mul:
      child(n->left, 2, os);
      os << "*";
      child(n->right, 3, os);
      return;
    case Kind::Div:
      child(n->left, 2, os);
      os << "/";
      child(n->right, 3, os);
      return;
    case Kind::Neg:
      os << "-";
      child(n->left, 3, os);
      return;
    case Kind::Pow:
      child(n->left, 5, os);
      os << "^" << n->exponent;
      return;
  }
}

}  // namespace

NodePtr parse(const std::string& text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string to_string(const NodePtr& node) {
  std::ostringstream os;
  render(node, os);
  return os.str();
}

}  // namespace nls::ast
