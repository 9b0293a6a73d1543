#include <gtest/gtest.h>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/oracle.hpp"
#include "zeroheavy/transcendental.hpp"

using namespace zeroheavy;

TEST(Oracle, EnclosureWidth) {
  FunctionSpec f = parse("exp(x)");
  for (unsigned p : {5u, 20u, 60u}) {
    Interval y = eval_enclosure(f, Rational(1, 3), p, 10);
    EXPECT_LE(y.width(), inverse_power(10, p));
    EXPECT_TRUE(intersect(y, exp_enclosure(Rational(1, 3), 300)).has_value());
  }
}

TEST(Oracle, ExactForPolynomials) {
  Interval y = eval_enclosure(parse("x^2+1/3"), Rational(1, 2), 10, 10);
  EXPECT_TRUE(y.contains(Rational(7, 12)));
}

TEST(Oracle, DomainErrors) {
  EXPECT_THROW(eval_enclosure(parse("ln(x)"), Rational(-1), 10, 10), DomainError);
  EXPECT_THROW(eval_enclosure(parse("1/x"), Rational(0), 10, 10), DomainError);
}

TEST(Oracle, IntervalImage) {
  Interval I(Rational(0), Rational(1));
  Interval y = eval_interval(parse("x^2"), I, 8, 10);
  EXPECT_LE(y.lo, Rational(0));
  EXPECT_GE(y.hi, Rational(1));
  EXPECT_LE(y.width(), Rational(1) + 2 * inverse_power(10, 8));
}

TEST(Oracle, CriticalPoints) {
  FunctionSpec f = parse("(x-1/3)*(x-2/3)");  // single critical point at 1/2
  CriticalPointSet cps = critical_points(f, Interval(Rational(0), Rational(1)), 40);
  ASSERT_TRUE(cps.complete);
  ASSERT_EQ(cps.enclosures.size(), 1u);
  EXPECT_TRUE(cps.enclosures[0].contains(Rational(1, 2)));
  EXPECT_TRUE(critical_points(parse("exp(x)"), Interval(Rational(0), Rational(1)), 40).enclosures.empty());
  CriticalPointSet s = critical_points(parse("sin(10*x)"), Interval(Rational(0), Rational(1)), 40);
  EXPECT_EQ(s.enclosures.size(), 3u);  // pi/20, 3pi/20, 5pi/20
}

TEST(Oracle, DistinctValueWitness) {
  FunctionSpec f = parse("x^2");
  Interval I(Rational(1, 4), Rational(1, 2));
  DistinctValueWitness w = distinct_value_witness(f, I, 10);
  EXPECT_TRUE(I.contains(w.z1));
  EXPECT_TRUE(I.contains(w.z2));
  Rational gap = w.value1.lo > w.value2.hi ? w.value1.lo - w.value2.hi : w.value2.lo - w.value1.hi;
  EXPECT_GT(gap, 2 * w.epsilon);
  EXPECT_THROW(distinct_value_witness(parse("0*x+1"), I, 10), WitnessNotFound);
}
