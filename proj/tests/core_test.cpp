#include <gtest/gtest.h>

#include <set>

#include "adet/core.hpp"
#include "oracles.hpp"

using namespace adet;

TEST(Multidegree, LatticeOperations) {
  const Multidegree a{2, 0, 1}, b{1, 3, 1};
  EXPECT_EQ(join(a, b), (Multidegree{2, 3, 1}));
  EXPECT_EQ(meet(a, b), (Multidegree{1, 0, 1}));
  EXPECT_EQ(a + b, (Multidegree{3, 3, 2}));
  EXPECT_EQ((Multidegree{3, 3, 2}) - b, a);
  EXPECT_TRUE(divides(meet(a, b), a));
  EXPECT_FALSE(divides(a, b));
  EXPECT_EQ(a.total_degree(), 3);
  EXPECT_EQ(a.to_string(), "(2,0,1)");
}

TEST(Multidegree, Errors) {
  EXPECT_THROW((Multidegree{1, -1}), DomainError);
  EXPECT_THROW(join(Multidegree{1}, Multidegree{1, 2}), DimensionError);
  EXPECT_THROW((Multidegree{0, 1}) - (Multidegree{1, 0}), DomainError);
  EXPECT_THROW(PolyContext(0), DomainError);
  EXPECT_THROW(PolyContext(kMaxVariables + 1), DomainError);
}

TEST(Multidegree, RelativeSupport) {
  EXPECT_EQ(supp_rel(Multidegree{3, 1}, Multidegree{3, 2}), (IndexSet{0}));
  EXPECT_EQ(supp_rel_count(Multidegree{0, 0}, Multidegree{0, 2}), 1);
  EXPECT_EQ(supp_rel_count(Multidegree{2, 0}, Multidegree{3, 1}), 0);
  EXPECT_EQ(supp(Multidegree{0, 4, 1}), (IndexSet{1, 2}));
  EXPECT_EQ(supp_count(Multidegree{0, 0, 0}), 0);
}

TEST(Multidegree, SlideAndSetminus) {
  EXPECT_EQ(slide_vec(Multidegree{2, 0, 1}, Multidegree{1, 5, 2}), (Multidegree{3, 0, 3}));
  EXPECT_EQ(slide_vec(Multidegree{1, 1}, Multidegree{0, 0}), (Multidegree{1, 1}));
  EXPECT_EQ(setminus_vec(Multidegree{3, 1}, Multidegree{2, 0}), (Multidegree{2, 0}));
  EXPECT_EQ(setminus_vec(Multidegree{3, 1}, Multidegree{3, 1}), (Multidegree{1, 1}));
  EXPECT_THROW(setminus_vec(Multidegree{1, 1}, Multidegree{2, 0}), DomainError);
}

TEST(Interval, VolumeAndContainment) {
  const Interval I(Multidegree{0, 1}, Multidegree{2, 3});
  EXPECT_EQ(I.volume(), 9u);
  EXPECT_TRUE(I.contains(Multidegree{1, 2}));
  EXPECT_FALSE(I.contains(Multidegree{1, 0}));
  EXPECT_THROW(Interval(Multidegree{1, 0}, Multidegree{0, 1}), DomainError);
}

TEST(Box, EnumerationMatchesOracleOrder) {
  const Multidegree a{2, 0, 3};
  std::vector<oracle::Point> got;
  for (const auto& d : enumerate_box(a)) got.push_back(d.coords());
  EXPECT_EQ(got, oracle::box_points(a.coords()));
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  EXPECT_EQ(box_volume(a), 12u);
  EXPECT_THROW(box_volume(Multidegree::constant(12, 9), 1000), ResourceError);
}

TEST(Box, IndexerRoundTrip) {
  const BoxIndexer ix(Multidegree{3, 1, 2});
  std::set<std::size_t> seen;
  for (const auto& d : enumerate_box(Multidegree{3, 1, 2})) {
    const std::size_t k = ix.index(d);
    EXPECT_EQ(ix.point(k), d);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), ix.volume());
  EXPECT_FALSE(ix.in_box(Multidegree{4, 0, 0}));
}

TEST(Grid, OrderConvexity) {
  Grid g(Multidegree{2, 2});
  g.insert(Multidegree{0, 0});
  g.insert(Multidegree{1, 1});
  EXPECT_FALSE(g.is_order_convex());
  g.insert(Multidegree{0, 1});
  g.insert(Multidegree{1, 0});
  EXPECT_TRUE(g.is_order_convex());
  EXPECT_EQ(g.size(), 4u);
  EXPECT_THROW(g.insert(Multidegree{3, 0}), DomainError);
}
