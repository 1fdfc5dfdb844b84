#include "symop/operators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symop;

namespace {

SymFunc s(std::initializer_list<int> parts, Rational c = 1) { return SymFunc::schur(Partition(parts), c); }

OperatorExpr U(std::initializer_list<int> p) { return OperatorExpr::U(s(p)); }
OperatorExpr D(std::initializer_list<int> p) { return OperatorExpr::D(s(p)); }

SymFunc random_schur(std::mt19937& rng, int max_deg) {
  const auto all = partitions_up_to(max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  SymFunc f;
  for (int i = 0; i < 3; ++i) f += SymFunc::schur(all[pick(rng)], coef(rng));
  return f;
}

}  // namespace

TEST(Apply, UpThenDown) {
  const SymFunc g = s({2, 1});
  EXPECT_EQ(apply(U({1}) * D({1}), g), s({3}) + s({2, 1}, 2) + s({1, 1, 1}));
  EXPECT_EQ(apply(D({1}) * U({1}), g), apply(U({1}) * D({1}), g) + g);
  EXPECT_EQ(apply(OperatorExpr::identity(), g), g);
}

TEST(Apply, OrderIsRightToLeft) {
  // D_2 U_1 (1) = D_2 s_1 = 0, but U_1 D_2 applied to s_2 is s_1 s_0 = s_1.
  EXPECT_TRUE(apply(D({2}) * U({1}), SymFunc::constant(1)).is_zero());
  EXPECT_EQ(apply(U({1}) * D({2}), s({2})), s({1}));
}

TEST(Apply, LinearInExpression) {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const SymFunc g = random_schur(rng, 4);
    const OperatorExpr a = U({1}) * D({1, 1}), b = OperatorExpr::K(s({2, 1}));
    EXPECT_EQ(apply(Rational(3) * a - b, g), Rational(3) * apply(a, g) - apply(b, g));
  }
}

TEST(ApplyKb, Examples) {
  for (const Partition& g : partitions_up_to(5))
    EXPECT_EQ(apply_kb(SymFunc::constant(1), SymFunc::schur(g)), SymFunc::schur(g));
  EXPECT_EQ(apply_kb(s({1}), s({2})), s({1, 1}));
  EXPECT_EQ(apply_kb(s({2}), s({1})), -s({1}));
  EXPECT_EQ(apply_kb(s({1}), s({2, 1})), s({3}) + s({2, 1}) + s({1, 1, 1}));
}

TEST(ApplyKb, Inhomogeneous) {
  const SymFunc g = s({2}) + s({1}, 5) + SymFunc::constant(2);
  EXPECT_EQ(apply_kb(s({1}), g), s({1, 1}) - Rational(2) * SymFunc::constant(1));
}

TEST(KbViaGamma, Examples) {
  EXPECT_EQ(kb_via_gamma(SymFunc::constant(1), s({2, 1})), s({2, 1}));
  EXPECT_EQ(kb_via_gamma(s({1}), s({2, 1})), apply_kb(s({1}), s({2, 1})));
  EXPECT_EQ(kb_via_gamma(s({2}), s({1})), -s({1}));
}

TEST(KbAsUd, Examples) {
  EXPECT_EQ(to_string(kb_as_ud(s({1}), 4)), "-Id + U(s[1])D(s[1])");
  EXPECT_EQ(to_string(kb_as_ud(SymFunc::constant(1), 4)), "Id");
  const OperatorExpr h2 = U({2}) * D({2}) + U({1, 1}) * D({1, 1}) - U({1}) * D({1});
  for (const Partition& g : partitions_up_to(5))
    EXPECT_EQ(apply(kb_as_ud(s({2}), 5), SymFunc::schur(g)), apply(h2, SymFunc::schur(g)));
}

TEST(KbAsUd, ThreeWayOracle) {
  for (const Partition& lam : partitions_up_to(3)) {
    const SymFunc f = SymFunc::schur(lam);
    const OperatorExpr ud = kb_as_ud(f, 5);
    for (const Partition& g : partitions_up_to(5)) {
      const SymFunc sg = SymFunc::schur(g);
      const SymFunc direct = apply_kb(f, sg);
      EXPECT_EQ(kb_via_gamma(f, sg), direct) << to_string(lam) << " " << to_string(g);
      EXPECT_EQ(apply(ud, sg), direct) << to_string(lam) << " " << to_string(g);
    }
  }
}

TEST(Matrix, Identity) {
  const TruncatedMatrix m = matrix_of(OperatorExpr::identity(), 4);
  ASSERT_EQ(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j) EXPECT_EQ(m.at(i, j), i == j ? 1 : 0);
}

TEST(Matrix, NonUniquenessExamples) {
  for (int n = 0; n <= 5; ++n)
    EXPECT_TRUE(matrix_of(OperatorExpr::K(SymFunc::p(Partition({2}))) * OperatorExpr::U(SymFunc::p(Partition({1}))), n)
                    .is_zero());
  EXPECT_EQ(matrix_of(D({1}) * OperatorExpr::K(s({2})), 3), matrix_of(D({1}) * OperatorExpr::K(s({1, 1})), 3));
  EXPECT_FALSE(independent({OperatorExpr::K(s({2})) * U({1}), OperatorExpr::K(s({1, 1})) * U({1})}, 4));
}

TEST(Matrix, CodomainBound) {
  const TruncatedMatrix m = matrix_of(U({2}), 3);
  EXPECT_EQ(m.rows.back().size(), 5);
  EXPECT_EQ(matrix_of(D({2}), 3).rows.back().size(), 1);
}

TEST(Matrix, AdjointPairing) {
  for (const Partition& mu : partitions_up_to(3)) {
    if (mu.empty()) continue;
    for (int n = 0; n <= 4; ++n) {
      const TruncatedMatrix up = matrix_of(OperatorExpr::U(SymFunc::schur(mu)), n);
      const TruncatedMatrix down = matrix_of(OperatorExpr::D(SymFunc::schur(mu)), n + mu.size());
      for (int d = 0; d <= n; ++d)
        EXPECT_EQ(up.block(d + mu.size(), d), down.block(d, d + mu.size()).transpose()) << to_string(mu) << " " << d;
    }
  }
}

TEST(Matrix, KroneckerBlocksSymmetric) {
  for (const Partition& lam : partitions_up_to(4)) {
    for (const OperatorExpr& e : {OperatorExpr::K(SymFunc::schur(lam)), OperatorExpr::KB(SymFunc::schur(lam))}) {
      const TruncatedMatrix m = matrix_of(e, 5);
      for (int d = 0; d <= 5; ++d) {
        const TruncatedMatrix b = m.block(d, d);
        EXPECT_EQ(b, b.transpose()) << to_string(e) << " degree " << d;
      }
    }
  }
}

TEST(Matrix, DegreeBookkeeping) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto all = partitions_up_to(7);
    const Partition g = all[rng() % all.size()];
    const Partition mu = partitions_up_to(3)[rng() % partitions_up_to(3).size()];
    const SymFunc sg = SymFunc::schur(g), sm = SymFunc::schur(mu);
    const SymFunc ru = apply(OperatorExpr::U(sm), sg);
    for (const auto& [lam, c] : ru.terms()) EXPECT_EQ(lam.size(), g.size() + mu.size());
    const SymFunc rd = apply(OperatorExpr::D(sm), sg);
    for (const auto& [lam, c] : rd.terms()) EXPECT_EQ(lam.size(), g.size() - mu.size());
    const SymFunc rk = apply(OperatorExpr::K(sm), sg);
    for (const auto& [lam, c] : rk.terms()) EXPECT_EQ(lam.size(), g.size());
    const SymFunc rkb = apply(OperatorExpr::KB(sm), sg);
    for (const auto& [lam, c] : rkb.terms()) EXPECT_EQ(lam.size(), g.size());
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(std::vector<std::vector<Rational>>{}), 0);
  EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rank({{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}), 2);
  EXPECT_EQ(rank({{Rational(1, 2), Rational(1, 3)}, {3, 2}}), 1);
  EXPECT_EQ(rank({{2, 0, 1}, {1, 3, 0}, {0, 1, 5}}), 3);
}

TEST(Rank, MatchesDeterminantOnSmallIntegers) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (auto& row : m)
      for (auto& x : row) x = v(rng);
    const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_EQ(rank(m) == 3, det != 0);
  }
}

TEST(Independence, UpDownFamilies) {
  std::vector<OperatorExpr> ud, du;
  for (const Partition& a : partitions_up_to(2))
    for (const Partition& b : partitions_up_to(2)) {
      ud.push_back(OperatorExpr::U(SymFunc::schur(a)) * OperatorExpr::D(SymFunc::schur(b)));
      du.push_back(OperatorExpr::D(SymFunc::schur(b)) * OperatorExpr::U(SymFunc::schur(a)));
    }
  EXPECT_TRUE(independent(ud, 5));
  EXPECT_TRUE(independent(du, 5));
  ud.push_back(D({1}) * U({1}));
  EXPECT_FALSE(independent(ud, 5));
}
