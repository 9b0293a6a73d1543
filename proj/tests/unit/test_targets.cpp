#include <gtest/gtest.h>

#include "zeroheavy/expr.hpp"
#include "zeroheavy/oracle.hpp"
#include "zeroheavy/targets.hpp"

using namespace zeroheavy;

TEST(Targets, NormalizeDomain) {
  NormalizedDomain n = normalize_domain(Interval(Rational(5, 4), Rational(7, 4)));
  EXPECT_EQ(n.conjugation.cell, 1);
  EXPECT_EQ(n.unit, Interval(Rational(1, 4), Rational(3, 4)));
  EXPECT_EQ(n.conjugation.to_original(Rational(1, 2)), Rational(3, 2));
  FunctionSpec g = n.conjugation.conjugate(parse("x^2"));
  Interval y = eval_enclosure(g, Rational(1, 2), 10, 10);
  EXPECT_TRUE(y.contains(Rational(9, 4)));
}

TEST(Targets, FindTargetInWindow) {
  TargetQuery q;
  q.base = 10;
  q.window = Interval(Rational(3, 10), Rational(4, 10));
  auto t = find_target(q);
  ASSERT_TRUE(t);
  Rational v = t->value();
  EXPECT_TRUE(q.window.interior_contains(Interval::point(v)));
  EXPECT_TRUE(decompose_tprime(t->tprime.value(), 10).has_value());
  EXPECT_GE(tau_prime(t->tprime), q.min_k);
}

TEST(Targets, NestingInOuterBand) {
  TargetQuery q;
  q.window = Interval(Rational(1, 10), Rational(9, 10));
  auto first = find_target(q);
  ASSERT_TRUE(first);
  std::size_t k = tau_prime(first->tprime);
  Rational v = first->value();
  TargetQuery r;
  r.window = Interval(v - inverse_power(10, k + 3), v + inverse_power(10, k + 3));
  r.outer = Interval(v - inverse_power(10, k + 1), v + inverse_power(10, k + 1));
  r.min_k = k + 1;
  r.checkpoint_index = 2;
  auto second = find_target(r);
  ASSERT_TRUE(second);
  std::size_t k2 = tau_prime(second->tprime);
  EXPECT_GT(k2, k);
  Rational w = second->value();
  Interval band(w - inverse_power(10, k2 + 1), w + inverse_power(10, k2 + 1));
  EXPECT_TRUE(r.outer->interior_contains(band));
  EXPECT_GE(k2 - 1, 2 * tau(second->tprime.stem()));
}

TEST(Targets, NegativeWindow) {
  TargetQuery q;
  q.window = Interval(Rational(-27, 10), Rational(-26, 10));
  auto t = find_target(q);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->sign, -1);
  EXPECT_TRUE(q.window.contains(t->value()));
}

TEST(Targets, TPoint) {
  auto tp = find_t_point(Interval(Rational(1, 3), Rational(1, 2)), 10, 3, 50, Rational(2, 5));
  ASSERT_TRUE(tp);
  EXPECT_GE(tp->second, 3u);
  EXPECT_GT(tp->first, Rational(1, 3));
  EXPECT_LT(tp->first, Rational(1, 2));
  auto fe = FiniteExpansionNumber::try_from_rational(tp->first, 10);
  ASSERT_TRUE(fe);
  EXPECT_LE(fe->length(), tp->second);
}
