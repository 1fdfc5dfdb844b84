#include "symop/expr.hpp"

#include <cctype>

namespace symop {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr expression_only() {
    Expr e = expr();
    expect_end();
    return e;
  }

  OpExpr operator_only() {
    OpExpr e = op_expr();
    expect_end();
    return e;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + (i_ < s_.size() ? "" : " before end of input"));
  }
  void expect_end() {
    if (peek() != '\0') fail(std::string("unexpected '") + s_[i_] + "'");
  }
  std::string identifier() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
    return std::string(s_.substr(i_, j - i_));
  }

  static Expr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }
  static OpExpr op_node(OpNode n) { return std::make_shared<const OpNode>(std::move(n)); }

  Expr binary(ExprNode::Kind k, Expr a, Expr b) {
    ExprNode n;
    n.kind = k;
    n.args = {std::move(a), std::move(b)};
    return node(std::move(n));
  }

  Expr expr() {
    Expr left = term();
    for (;;) {
      if (accept('+')) left = binary(ExprNode::Kind::add, left, term());
      else if (accept('-')) left = binary(ExprNode::Kind::sub, left, term());
      else return left;
    }
  }

  Expr term() {
    Expr left = unary();
    while (accept('*')) left = binary(ExprNode::Kind::mul, left, unary());
    return left;
  }

  Expr unary() {
    if (accept('-')) {
      ExprNode n;
      n.kind = ExprNode::Kind::neg;
      n.args = {unary()};
      return node(std::move(n));
    }
    return power();
  }

  Expr power() {
    Expr base = factor();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = i_;
    const std::string digits = integer_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 4) fail_at(at, "exponent too large");
    ExprNode n;
    n.kind = ExprNode::Kind::pow;
    n.exponent = std::stoi(digits);
    n.args = {base};
    return node(std::move(n));
  }

  std::string integer_digits() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    std::string out(s_.substr(i_, j - i_));
    i_ = j;
    return out;
  }

  Rational number() {
    const std::size_t at = i_;
    std::string text = integer_digits();
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      const std::string den = integer_digits();
      if (den.empty()) fail("expected a denominator");
      text += "/" + den;
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    }
  }

  // Text between '[' and ']', validated as a partition (or skew shape).
  std::string bracket_body() {
    expect('[');
    const std::size_t start = i_;
    const auto close = s_.find(']', i_);
    if (close == std::string_view::npos) fail_at(s_.size(), "missing ']'");
    i_ = close + 1;
    return std::string(s_.substr(start, close - start));
  }

  Partition partition_in(std::string_view body, std::size_t at) {
    try {
      return parse_partition(body);
    } catch (const std::invalid_argument& e) {
      fail_at(at, std::string("invalid partition: ") + e.what());
    }
  }

  Expr factor() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprNode n;
      n.kind = ExprNode::Kind::number;
      n.value = number();
      return node(std::move(n));
    }
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    const std::size_t at = i_;
    const std::string name = identifier();
    if (name.empty()) fail(std::string("unexpected '") + c + "'");
    i_ += name.size();
    if (name == "s" || name == "h" || name == "e" || name == "p") {
      skip();
      const std::size_t body_at = i_ + 1;
      const std::string body = bracket_body();
      ExprNode n;
      n.kind = ExprNode::Kind::atom;
      n.basis = parse_basis(name);
      n.part = partition_in(body, body_at);
      return node(std::move(n));
    }
    if (name == "sk") {
      skip();
      const std::size_t body_at = i_ + 1;
      const std::string body = bracket_body();
      const auto slash = body.find('/');
      ExprNode n;
      n.kind = ExprNode::Kind::skew_atom;
      n.part = partition_in(body.substr(0, slash), body_at);
      if (slash != std::string::npos) n.inner = partition_in(body.substr(slash + 1), body_at + slash + 1);
      return node(std::move(n));
    }
    if (name == "kron") {
      expect('(');
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(')');
      return binary(ExprNode::Kind::kron, a, b);
    }
    if (name == "apply") {
      expect('(');
      ExprNode n;
      n.kind = ExprNode::Kind::apply;
      n.op = op_expr();
      expect(',');
      n.args = {expr()};
      expect(')');
      return node(std::move(n));
    }
    fail_at(at, "unknown name '" + name + "'");
  }

  // Operators.

  OpExpr op_binary(OpNode::Kind k, OpExpr a, OpExpr b) {
    OpNode n;
    n.kind = k;
    n.args = {std::move(a), std::move(b)};
    return op_node(std::move(n));
  }

  OpExpr op_expr() {
    OpExpr left = op_term();
    for (;;) {
      if (accept('+')) left = op_binary(OpNode::Kind::add, left, op_term());
      else if (accept('-')) left = op_binary(OpNode::Kind::sub, left, op_term());
      else return left;
    }
  }

  bool starts_op_factor() {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  OpExpr op_term() {
    if (accept('-')) {
      OpNode n;
      n.kind = OpNode::Kind::neg;
      n.args = {op_term()};
      return op_node(std::move(n));
    }
    OpExpr left = op_factor();
    for (;;) {
      if (accept('*')) left = op_binary(OpNode::Kind::compose, left, op_factor());
      else if (starts_op_factor()) left = op_binary(OpNode::Kind::compose, left, op_factor());
      else return left;
    }
  }

  OpExpr op_factor() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      OpNode n;
      n.kind = OpNode::Kind::scalar;
      n.value = number();
      return op_node(std::move(n));
    }
    if (accept('(')) {
      OpExpr e = op_expr();
      expect(')');
      return e;
    }
    const std::size_t at = i_;
    const std::string name = identifier();
    if (name.empty()) fail(std::string("unexpected '") + c + "'");
    i_ += name.size();
    OpNode n;
    n.kind = OpNode::Kind::gen;
    if (name == "Id") {
      n.gen = OpKind::id;
      return op_node(std::move(n));
    }
    if (name == "U") n.gen = OpKind::u;
    else if (name == "D") n.gen = OpKind::d;
    else if (name == "K") n.gen = OpKind::k;
    else if (name == "KB") n.gen = OpKind::kb;
    else fail_at(at, "unknown operator '" + name + "', expected Id, U, D, K or KB");
    expect('(');
    n.arg = expr();
    expect(')');
    return op_node(std::move(n));
  }
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).expression_only(); }
OpExpr parse_operator(std::string_view text) { return Parser(text).operator_only(); }

SymFunc evaluate(const ExprNode& e) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::number: return SymFunc::constant(e.value);
    case K::atom: return to_schur(SymFunc::basis_element(e.basis, e.part));
    case K::skew_atom: return skew_schur(e.part, e.inner);
    case K::add: return evaluate(*e.args[0]) + evaluate(*e.args[1]);
    case K::sub: return evaluate(*e.args[0]) - evaluate(*e.args[1]);
    case K::neg: return -evaluate(*e.args[0]);
    case K::mul: return to_schur(mul(evaluate(*e.args[0]), evaluate(*e.args[1])));
    case K::pow: {
      const SymFunc base = evaluate(*e.args[0]);
      SymFunc out = SymFunc::constant(1);
      for (int k = 0; k < e.exponent; ++k) out = to_schur(mul(out, base));
      return out;
    }
    case K::kron: return to_schur(kronecker(evaluate(*e.args[0]), evaluate(*e.args[1])));
    case K::apply: return apply(evaluate(*e.op), evaluate(*e.args[0]));
  }
  return {};
}

OperatorExpr evaluate(const OpNode& e) {
  using K = OpNode::Kind;
  switch (e.kind) {
    case K::scalar: return OperatorExpr::identity(e.value);
    case K::gen: return e.gen == OpKind::id ? OperatorExpr::identity() : OperatorExpr::generator(e.gen, evaluate(*e.arg));
    case K::add: return evaluate(*e.args[0]) + evaluate(*e.args[1]);
    case K::sub: return evaluate(*e.args[0]) - evaluate(*e.args[1]);
    case K::neg: return Rational(-1) * evaluate(*e.args[0]);
    case K::compose: return evaluate(*e.args[0]) * evaluate(*e.args[1]);
  }
  return {};
}

}  // namespace symop
