#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symop/operators.hpp"
#include "symop/symfunc.hpp"

namespace symop {

/// Syntax or validation error; position is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct OpNode;

/// Expression tree. Children are shared and immutable after parsing.
struct ExprNode {
  enum class Kind { number, atom, skew_atom, add, sub, neg, mul, pow, kron, apply };
  Kind kind = Kind::number;
  Rational value;       // number
  Basis basis{};        // atom
  Partition part;       // atom
  Partition inner;      // skew_atom: sk[part/inner]
  int exponent = 0;     // pow
  std::vector<std::shared_ptr<const ExprNode>> args;
  std::shared_ptr<const OpNode> op;  // apply
};

/// Operator expressions: Id, U(expr), D(expr), K(expr), KB(expr), rational
/// scalars, sums, differences and composition by `*` or juxtaposition.
struct OpNode {
  enum class Kind { scalar, gen, add, sub, neg, compose };
  Kind kind = Kind::scalar;
  Rational value;  // scalar
  OpKind gen{};    // gen (Id included)
  std::shared_ptr<const ExprNode> arg;
  std::vector<std::shared_ptr<const OpNode>> args;
};

using Expr = std::shared_ptr<const ExprNode>;
using OpExpr = std::shared_ptr<const OpNode>;

/// expr := term (('+'|'-') term)*; term := unary ('*' unary)*;
/// unary := '-' unary | power; power := factor ('^' integer)?;
/// factor := rational | s/h/e/p[parts] | sk[outer/inner] | kron(expr, expr)
///         | apply(op, expr) | '(' expr ')'.
Expr parse_expression(std::string_view text);
OpExpr parse_operator(std::string_view text);

/// Exact value in the Schur basis.
SymFunc evaluate(const ExprNode& e);
OperatorExpr evaluate(const OpNode& e);
inline SymFunc evaluate(std::string_view text) { return evaluate(*parse_expression(text)); }
inline OperatorExpr evaluate_operator(std::string_view text) { return evaluate(*parse_operator(text)); }

}  // namespace symop
