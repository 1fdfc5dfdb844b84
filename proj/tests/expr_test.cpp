#include "symop/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symop;

namespace {

SymFunc s(std::initializer_list<int> parts, Rational c = 1) { return SymFunc::schur(Partition(parts), c); }

std::size_t error_position(std::string_view text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for " << text;
  return std::string::npos;
}

}  // namespace

TEST(Parse, Shapes) {
  const Expr e = parse_expression("s[2,1]*s[1]");
  EXPECT_EQ(e->kind, ExprNode::Kind::mul);
  EXPECT_EQ(e->args[0]->kind, ExprNode::Kind::atom);
  EXPECT_EQ(e->args[0]->part, Partition({2, 1}));
  EXPECT_EQ(parse_expression("kron(s[2,1], s[2,1])")->kind, ExprNode::Kind::kron);
  EXPECT_EQ(parse_expression("-s[1]")->kind, ExprNode::Kind::neg);
  EXPECT_EQ(parse_expression("s[1] - s[2] + s[3]")->kind, ExprNode::Kind::add);
  EXPECT_EQ(parse_expression("s[1]^3")->exponent, 3);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate("s[1]*s[1]"), s({2}) + s({1, 1}));
  EXPECT_EQ(to_string(evaluate("s[1]*s[1]")), "s[2] + s[1,1]");
  EXPECT_EQ(evaluate("kron(s[2,1], s[2,1])"), s({3}) + s({2, 1}) + s({1, 1, 1}));
  EXPECT_EQ(evaluate("sk[2,1/1]"), s({2}) + s({1, 1}));
  EXPECT_EQ(to_string(evaluate("s[0]")), "s[0]");
  EXPECT_EQ(evaluate("h[2] - e[2]"), s({2}) - s({1, 1}));
  EXPECT_EQ(evaluate("p[1]^2"), s({2}) + s({1, 1}));
  EXPECT_EQ(evaluate("-1/2*s[1] + 3"), s({1}, Rational(-1, 2)) + SymFunc::constant(3));
  EXPECT_EQ(evaluate("2*(s[1] - s[1])"), SymFunc());
  EXPECT_EQ(evaluate("sk[1/2]"), SymFunc());
  EXPECT_EQ(evaluate(" s [ 2 , 1 ] "), s({2, 1}));
}

TEST(Evaluate, Precedence) {
  EXPECT_EQ(evaluate("s[1] + s[1]*s[1]"), s({1}) + s({2}) + s({1, 1}));
  EXPECT_EQ(evaluate("-s[1]^2"), -(s({2}) + s({1, 1})));
  EXPECT_EQ(evaluate("s[1] - s[1] - s[1]"), -s({1}));
}

TEST(Evaluate, Apply) {
  EXPECT_EQ(evaluate("apply(U(s[1])D(s[1]), s[2,1])"), s({3}) + s({2, 1}, 2) + s({1, 1, 1}));
  EXPECT_EQ(evaluate("apply(U(s[1])*D(s[1]) - Id, s[2,1])"), s({3}) + s({2, 1}) + s({1, 1, 1}));
  EXPECT_EQ(evaluate("apply(KB(s[1]), s[2,1])"), s({3}) + s({2, 1}) + s({1, 1, 1}));
  EXPECT_EQ(evaluate("apply(2*Id, s[1])"), s({1}, 2));
}

TEST(Parse, Errors) {
  try {
    parse_expression("s[1,2]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("weakly decreasing"), std::string::npos);
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_EQ(error_position("s[1] +"), 6u);
  EXPECT_EQ(error_position("s[1] s[2]"), 5u);
  EXPECT_EQ(error_position("q[1]"), 0u);
  EXPECT_EQ(error_position("kron(s[1] s[1])"), 10u);
  EXPECT_EQ(error_position("s[1"), 3u);
  EXPECT_EQ(error_position("1/0"), 0u);
  EXPECT_EQ(error_position("s[1]^"), 5u);
  EXPECT_EQ(error_position("(s[1]"), 5u);
  EXPECT_THROW(parse_operator("X(s[1])"), ParseError);
  EXPECT_THROW(parse_operator("U s[1]"), ParseError);
}

TEST(RoundTrip, RenderThenParse) {
  std::mt19937 rng(2024);
  const auto parts = partitions_up_to(6);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), count(0, 5);
  for (int t = 0; t < 100; ++t) {
    SymFunc f;
    for (int k = count(rng); k > 0; --k) f.add_term(parts[pick(rng)], ratio(num(rng), den(rng)));
    const std::string text = to_string(f);
    const SymFunc back = evaluate(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(to_string(back), text);
  }
}

TEST(RoundTrip, OperatorRender) {
  const std::vector<OperatorExpr> ops = {
      kb_as_ud(s({1}), 3),
      kb_as_ud(s({2}), 3),
      OperatorExpr::K(s({2}) - s({1, 1})) * OperatorExpr::U(s({1}, Rational(1, 2))),
      Rational(-3) * OperatorExpr::identity(),
  };
  for (const OperatorExpr& op : ops) {
    const OperatorExpr back = evaluate_operator(to_string(op));
    EXPECT_EQ(matrix_of(back, 4), matrix_of(op, 4)) << to_string(op);
  }
}
