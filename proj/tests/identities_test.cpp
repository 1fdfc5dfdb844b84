#include "symop/identities.hpp"

#include <gtest/gtest.h>

#include "symop/operators.hpp"

using namespace symop;

namespace {

SymFunc s(std::initializer_list<int> parts, Rational c = 1) { return SymFunc::schur(Partition(parts), c); }

IdentityParams ab(std::initializer_list<int> a, std::initializer_list<int> b) {
  return {{{"alpha", Partition(a)}, {"beta", Partition(b)}}, {}};
}

// Copy of an entry whose right-hand sides are negated.
IdentityEntry corrupted(const IdentityEntry& e) {
  IdentityEntry bad = e;
  bad.id = e.id + "_corrupted";
  bad.check = [inner = e.check](const IdentityParams& p, const SuiteBounds& b) {
    auto out = inner(p, b);
    for (Comparison& c : out) c.rhs = -c.rhs;
    return out;
  };
  return bad;
}

}  // namespace

TEST(Catalog, HasEveryEntry) {
  const char* ids[] = {"thm_main_1",     "thm_main_2",     "thm_main_3",      "thm_main_4",      "thm_main_5",
                       "thm_main_6",     "thm_main_cor_1", "thm_main_cor_2",  "thm_main_cor_3",  "thm_main_cor_4",
                       "thm_main_cor_5", "thm_main_cor_6", "commutators_1",   "commutators_2",   "commutators_3",
                       "foulkes",        "littlewood",     "similar",         "reverse_foulkes", "gessel_1",
                       "gessel_2",       "gessel_3",       "kb1",             "straightcorners", "kbk_ud",
                       "kbf_ud",         "tworow_hook",    "littlewood_sum",  "skew_corners",    "nokronecker",
                       "tabmanip2"};
  EXPECT_EQ(catalog().size(), std::size(ids));
  for (const char* id : ids) EXPECT_EQ(catalog_entry(id).id, id);
  EXPECT_THROW(catalog_entry("nope"), std::invalid_argument);
}

TEST(Params, RoundTrip) {
  const IdentityParams p = parse_params("alpha=2,1 beta=0 k=3", {"k"});
  EXPECT_EQ(p.part("alpha"), Partition({2, 1}));
  EXPECT_TRUE(p.part("beta").empty());
  EXPECT_EQ(p.integer("k"), 3);
  EXPECT_EQ(to_string(p), "alpha=2,1 beta=0 k=3");
  EXPECT_THROW(p.part("gamma"), std::invalid_argument);
  EXPECT_THROW(parse_params("alpha", {}), std::invalid_argument);
  EXPECT_THROW(parse_params("alpha=1,2", {}), std::invalid_argument);
  EXPECT_THROW(parse_params("k=2,1", {"k"}), std::invalid_argument);
}

TEST(VerifyInstance, LeibnizRule) {
  const VerificationReport r = verify_instance("thm_main_1", ab({1}, {1}), {3, 3});
  EXPECT_TRUE(r.passed()) << to_string(r);
  EXPECT_EQ(r.instances, 7u);
  const OperatorExpr du = OperatorExpr::D(s({1})) * OperatorExpr::U(s({1}));
  const OperatorExpr ud = OperatorExpr::U(s({1})) * OperatorExpr::D(s({1})) + OperatorExpr::identity();
  for (const Partition& g : partitions_up_to(3)) EXPECT_EQ(apply(du, SymFunc::schur(g)), apply(ud, SymFunc::schur(g)));
}

TEST(VerifyInstance, StraightCorners) {
  const auto& e = catalog_entry("straightcorners");
  const IdentityParams p{{{"alpha", Partition({2, 1})}}, {}};
  const auto cmp = e.check(p, {});
  ASSERT_FALSE(cmp.empty());
  EXPECT_EQ(cmp[0].lhs, s({3}) + s({2, 1}) + s({1, 1, 1}));
  EXPECT_EQ(cmp[0].rhs, s({3}) + s({2, 1}) + s({1, 1, 1}));
  EXPECT_TRUE(verify_instance(e, p, {}).passed());
}

TEST(VerifyInstance, SkewCorners) {
  const IdentityParams p{{{"alpha", Partition({2, 1})}, {"theta", Partition({1})}}, {}};
  const auto cmp = catalog_entry("skew_corners").check(p, {});
  ASSERT_EQ(cmp.size(), 1u);
  EXPECT_EQ(cmp[0].lhs, s({2}) + s({1, 1}));
  EXPECT_EQ(cmp[0].rhs, s({2}) + s({1, 1}));
}

TEST(VerifyInstance, Errors) {
  EXPECT_THROW(verify_instance("unknown", {}, {}), std::invalid_argument);
  EXPECT_THROW(verify_instance("thm_main_1", IdentityParams{{{"alpha", Partition({1})}}, {}}, {}), std::invalid_argument);
  EXPECT_THROW(verify_instance("gessel_1", IdentityParams{{}, {{"m", 1}}}, {}), std::invalid_argument);
}

TEST(Suite, DefaultBoundsPass) {
  for (const VerificationReport& r : run_suite(SuiteBounds{3, 4})) {
    EXPECT_TRUE(r.passed()) << to_string(r);
    EXPECT_GT(r.instances, 0u) << r.id;
  }
}

TEST(Suite, GesselUpToFive) {
  for (const char* id : {"gessel_1", "gessel_2", "gessel_3"}) {
    const VerificationReport r = run_entry(catalog_entry(id), {5, 5});
    EXPECT_TRUE(r.passed()) << to_string(r);
  }
}

TEST(Suite, CorruptedEntryFails) {
  const IdentityEntry bad = corrupted(catalog_entry("thm_main_1"));
  const auto reports = run_suite({bad}, {1, 2});
  ASSERT_EQ(reports.size(), 1u);
  const VerificationReport& r = reports[0];
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.failures.empty());
  // alpha = beta = 0 on gamma = 0: lhs 1, rhs -1.
  EXPECT_EQ(r.failures[0].params, "alpha=0 beta=0 rhs gamma=0");
  EXPECT_EQ(r.failures[0].lhs, "s[0]");
  EXPECT_EQ(r.failures[0].rhs, "-s[0]");
  EXPECT_NE(to_string(r).find("FAIL thm_main_1_corrupted"), std::string::npos);
}

TEST(Suite, DeterministicAcrossThreads) {
  const IdentityEntry bad = corrupted(catalog_entry("thm_main_2"));
  const VerificationReport one = run_entry(bad, {2, 3}, 1);
  const VerificationReport many = run_entry(bad, {2, 3}, 4);
  ASSERT_EQ(one.failures.size(), many.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) EXPECT_EQ(one.failures[i].params, many.failures[i].params);
  EXPECT_EQ(one.instances, many.instances);
}
