#include "symop/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace symop;

namespace {

// Counts partitions of n with parts at most k by the usual recurrence.
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return count_partitions(n, k - 1) + (n >= k ? count_partitions(n - k, k) : 0);
}

}  // namespace

TEST(Partition, CanonicalForm) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1}).size(), 4);
  EXPECT_EQ(Partition({3, 1}).length(), 2);
  EXPECT_TRUE(Partition({0}).empty());
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 2})), Partition({2, 2}));
  for (int n = 0; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains(Partition({1}), Partition({3, 1})));
  EXPECT_FALSE(contains(Partition({2, 2}), Partition({3, 1})));
  for (const Partition& p : partitions_up_to(5)) EXPECT_TRUE(contains(Partition{}, p));
}

TEST(Partition, Corners) {
  EXPECT_EQ(noc(Partition({3, 1})), 2);
  EXPECT_TRUE(corners(Partition{}).empty());
  const auto c = corners(Partition({2, 2}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Cell{1, 1}));
  // Top row first.
  const auto d = corners(Partition({3, 1}));
  EXPECT_EQ(d[0], (Cell{1, 0}));
  EXPECT_EQ(d[1], (Cell{0, 2}));
}

TEST(Partition, AddRemoveSets) {
  EXPECT_EQ(addremove_set(Partition({3, 1})),
            (std::vector<Partition>{Partition({4}), Partition({2, 2}), Partition({2, 1, 1})}));
  EXPECT_TRUE(addremove_set(Partition({1})).empty());
  EXPECT_EQ(add_set(Partition({2})), (std::vector<Partition>{Partition({3}), Partition({2, 1})}));
  EXPECT_EQ(noc(Partition({2})), 1);
}

TEST(Partition, AddSetHasOneMoreThanCorners) {
  for (const Partition& p : partitions_up_to(10))
    EXPECT_EQ(static_cast<int>(add_set(p).size()), noc(p) + 1) << to_string(p);
}

TEST(Partition, RemoveAndAddAreDual) {
  const auto all = partitions_up_to(8);
  for (const Partition& lam : all) {
    const auto rem = remove_set(lam);
    for (const Partition& mu : partitions_of(std::max(lam.size() - 1, 0))) {
      if (lam.empty()) break;
      const bool in_rem = std::find(rem.begin(), rem.end(), mu) != rem.end();
      const auto add = add_set(mu);
      const bool in_add = std::find(add.begin(), add.end(), lam) != add.end();
      EXPECT_EQ(in_rem, in_add) << to_string(lam) << " " << to_string(mu);
    }
  }
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(partitions_of(4), (std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                                       Partition({2, 1, 1}), Partition({1, 1, 1, 1})}));
  EXPECT_EQ(partitions_of(8).size(), 22u);
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<long>(ps.size()), count_partitions(n, n));
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), GradedOrder{}));
    EXPECT_EQ(std::set<Partition>(ps.begin(), ps.end()).size(), ps.size());
  }
}

TEST(Partition, SubAndSuperPartitions) {
  for (const Partition& lam : partitions_up_to(7))
    for (int k = 0; k <= 3; ++k) {
      std::vector<Partition> brute_sub, brute_sup;
      if (lam.size() >= k)
        for (const Partition& mu : partitions_of(lam.size() - k))
          if (contains(mu, lam)) brute_sub.push_back(mu);
      for (const Partition& mu : partitions_of(lam.size() + k))
        if (contains(lam, mu)) brute_sup.push_back(mu);
      EXPECT_EQ(subpartitions(lam, k), brute_sub) << to_string(lam) << " -" << k;
      EXPECT_EQ(superpartitions(lam, k), brute_sup) << to_string(lam) << " +" << k;
    }
}

TEST(Partition, Strips) {
  for (const Partition& lam : partitions_up_to(6))
    for (int k = 0; k <= 3; ++k) {
      std::vector<Partition> horizontal, vertical;
      for (const Partition& mu : superpartitions(lam, k)) {
        bool ok = true;  // at most one box per column
        for (int i = 1; i <= mu.length(); ++i) ok = ok && mu[static_cast<std::size_t>(i)] <= lam[static_cast<std::size_t>(i - 1)];
        if (ok) horizontal.push_back(mu);
      }
      for (const Partition& mu : subpartitions(lam, k)) {
        const SkewShape s(lam, mu);
        std::set<int> rows;
        for (Cell c : s.cells()) rows.insert(c.row);
        if (static_cast<int>(rows.size()) == k) vertical.push_back(mu);
      }
      EXPECT_EQ(add_horizontal_strip(lam, k), horizontal);
      EXPECT_EQ(remove_vertical_strip(lam, k), vertical);
    }
}

TEST(Partition, ZFactor) {
  EXPECT_EQ(z_factor(Partition{}), 1);
  EXPECT_EQ(z_factor(Partition({1, 1, 1})), 6);
  EXPECT_EQ(z_factor(Partition({3, 1, 1})), 6);
  // Conjugacy classes partition S_n.
  Integer fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    Integer total = 0;
    for (const Partition& p : partitions_of(n)) total += fact / z_factor(p);
    EXPECT_EQ(total, fact);
  }
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(to_string(Partition{}), "0");
  EXPECT_EQ(parse_partition("3,1,0"), Partition({3, 1}));
  EXPECT_EQ(parse_partition("0"), Partition{});
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,,1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("a"), std::invalid_argument);
  const SkewShape s = parse_skew_shape("5,3,1/2,1");
  EXPECT_EQ(s.outer(), Partition({5, 3, 1}));
  EXPECT_EQ(s.inner(), Partition({2, 1}));
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(to_string(s), "5,3,1/2,1");
  EXPECT_THROW(parse_skew_shape("2/3"), std::invalid_argument);
  for (const Partition& p : partitions_up_to(6)) EXPECT_EQ(parse_partition(to_string(p)), p);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_EQ(parse_rational("+3"), Rational(3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
