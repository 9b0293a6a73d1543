#include <gtest/gtest.h>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/transcendental.hpp"

using namespace zeroheavy;

TEST(Omega, SmallCounts) {
  // words of length 4 over {0,1} with at least 3 zeros
  EXPECT_EQ(count_omega(2, 4, Rational(1, 4)), 5);
  EXPECT_EQ(count_omega(3, 3, Rational(1, 3)), 7);
  EXPECT_EQ(count_omega(10, 1, Rational(1, 8)), 1);
}

TEST(Omega, UpperBoundFromThreshold) {
  for (Rational eps : {Rational(1, 8), Rational(1, 4), Rational(1, 3)}) {
    std::size_t m0 = omega_bound_threshold(eps);
    for (unsigned b : {2u, 3u, 10u})
      for (std::size_t M = m0; M < m0 + 40; ++M)
        EXPECT_GE(omega_upper_bound(b, M, eps), Rational(count_omega(b, M, eps)));
  }
  EXPECT_EQ(omega_bound_threshold(Rational(1, 4)), 6u);
}

TEST(Entropy, Enclosure) {
  Interval h = binary_entropy(Rational(1, 2));
  EXPECT_TRUE(intersect(h, ln_enclosure(Rational(2), 160)).has_value());
  EXPECT_EQ(binary_entropy(Rational(0)), Interval::point(Rational(0)));
  EXPECT_LT(h.width(), inverse_power(2, 100));
}

TEST(Epsilon, Halving) {
  EXPECT_EQ(epsilon_for_s(Rational(1), 2).epsilon, Rational(1, 32));
  EXPECT_EQ(epsilon_for_s(Rational(1, 10), 10).epsilon, Rational(1, 128));
  EXPECT_TRUE(epsilon_valid(Rational(1), 2, Rational(1, 32)));
  EXPECT_FALSE(epsilon_valid(Rational(1), 2, Rational(1, 4)));
}

TEST(Cover, DecreasesWithK) {
  Rational eps = epsilon_for_s(Rational(1), 2).epsilon;
  CoverBoundReport a = cover_cost(2, Rational(1), eps, 40, 80);
  CoverBoundReport b = cover_cost(2, Rational(1), eps, 60, 120);
  EXPECT_TRUE(a.epsilon_valid);
  EXPECT_LT(b.total, a.total);
  EXPECT_LE(a.total, a.formula.lo);
  EXPECT_LE(b.total, b.formula.lo);
  EXPECT_THROW(cover_cost(2, Rational(1), Rational(1, 4), 40, 80), ConstraintError);
}
