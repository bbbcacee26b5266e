#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "mgfix/types.hpp"

using namespace mgfix;

TEST(Point, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(Point(-1e-300), std::domain_error);
  EXPECT_THROW(Point(std::numeric_limits<double>::infinity()), std::domain_error);
  EXPECT_THROW(Point(std::nan("")), std::domain_error);
  EXPECT_EQ(Point(0.0).value(), 0.0);
  EXPECT_LT(Point(1.0), Point(2.0));
}

TEST(LogDistance, ArithmeticAndBoundary) {
  const LogDistance a{0.5}, b{0.25};
  EXPECT_DOUBLE_EQ((a + b).log, 0.75);
  EXPECT_DOUBLE_EQ((2.0 * a).log, 1.0);
  EXPECT_DOUBLE_EQ(LogDistance{std::log(4.0)}.multiplicative(), 4.0);
}

TEST(Interval, ContainsHonorsOpenEnds) {
  const Interval i = Interval::half_open(0.0, 1.0);
  EXPECT_TRUE(i.contains(0.0));
  EXPECT_FALSE(i.contains(1.0));
  EXPECT_TRUE(i.contains(std::nextafter(1.0, 0.0)));
  EXPECT_FALSE(Interval::open(1.0, 1.0).contains(1.0));
  EXPECT_TRUE(Interval::open(1.0, 1.0).empty());
  EXPECT_FALSE(Interval::closed(1.0, 1.0).empty());
  EXPECT_FALSE(Interval::nonnegative().bounded());
}

TEST(Interval, FirstLastNudgeInward) {
  const Interval i = Interval::open(0.0, 1.0);
  EXPECT_GT(i.first(), 0.0);
  EXPECT_LT(i.last(), 1.0);
  EXPECT_TRUE(i.contains(i.first()));
  EXPECT_TRUE(i.contains(i.last()));
  EXPECT_EQ(Interval::closed(2.0, 3.0).first(), 2.0);
}

TEST(Interval, Parse) {
  auto i = Interval::parse("0.34:5.5");
  ASSERT_TRUE(i);
  EXPECT_EQ(*i, Interval::closed(0.34, 5.5));
  EXPECT_FALSE(Interval::parse("5:1"));
  EXPECT_FALSE(Interval::parse("abc"));
  EXPECT_FALSE(Interval::parse("1:"));
  EXPECT_FALSE(Interval::parse("1:2:3"));
}

TEST(Interval, ToString) {
  EXPECT_EQ(Interval::half_open(0.0, 10.0).to_string(), "[0, 10)");
  EXPECT_EQ(Interval::nonnegative().to_string(), "[0, inf)");
}

TEST(Interval, Intersect) {
  const Interval a = Interval::closed(0.0, 2.0);
  const Interval b = Interval::half_open(1.0, 3.0);
  EXPECT_EQ(intersect(a, b), Interval::closed(1.0, 2.0));
  EXPECT_TRUE(intersect(Interval::closed(0, 1), Interval::closed(2, 3)).empty());
  EXPECT_EQ(intersect(Interval::closed(0, 1), Interval::half_open(0, 1)), Interval::half_open(0, 1));
}

TEST(Error, CarriesCodeAndIndex) {
  const Error e(ErrorCode::domain_exit, "left", 3);
  EXPECT_EQ(e.code(), ErrorCode::domain_exit);
  EXPECT_EQ(e.index(), 3u);
  EXPECT_EQ(to_string(ErrorCode::seed_condition_violated), "SeedConditionViolated");
}
