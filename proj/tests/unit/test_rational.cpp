#include <gtest/gtest.h>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/rational.hpp"

using namespace zeroheavy;

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, FloorCeilPow) {
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ipow(10, 5), 100000);
  EXPECT_EQ(pow_int(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(inverse_power(3, 4), Rational(1, 81));
  EXPECT_TRUE(is_dyadic(Rational(5, 64)));
  EXPECT_FALSE(is_dyadic(Rational(1, 3)));
}

TEST(Rational, Decimal) {
  EXPECT_EQ(to_decimal(Rational(1, 8), 4), "0.1250");
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
}

TEST(Interval, Basics) {
  Interval a(Rational(0), Rational(1)), b(Rational(1, 2), Rational(2));
  auto c = intersect(a, b);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Interval(Rational(1, 2), Rational(1)));
  EXPECT_FALSE(intersect(a, Interval(Rational(3), Rational(4))));
  EXPECT_EQ(hull(a, b), Interval(Rational(0), Rational(2)));
  EXPECT_TRUE(a.interior_contains(Interval(Rational(1, 4), Rational(3, 4))));
  EXPECT_FALSE(a.interior_contains(a));
}
