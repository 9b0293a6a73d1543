#include <gtest/gtest.h>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/oracle.hpp"
#include "zeroheavy/zigzag.hpp"

using namespace zeroheavy;

namespace {
const Interval kUnit(Rational(1, 4), Rational(3, 4));
}

TEST(Zigzag, Sigma) {
  // sigma(N^2 + m) = m + 1 for 0 <= m <= 2N.
  EXPECT_EQ(sigma(1), 1u);
  EXPECT_EQ(sigma(2), 2u);
  EXPECT_EQ(sigma(4), 1u);
  EXPECT_EQ(sigma(9 + 4), 5u);
  for (std::size_t N = 1; N < 20; ++N)
    for (std::size_t m = 0; m <= 2 * N; ++m) EXPECT_EQ(sigma(N * N + m), m + 1);
}

class SingleRun : public ::testing::TestWithParam<const char*> {};

TEST_P(SingleRun, CompletesWithValidCertificates) {
  ConstructionResult r = run_single(parse(GetParam()), kUnit, 10, 60, 64, {});
  ASSERT_EQ(r.status, RunStatus::Complete) << r.message;
  EXPECT_TRUE(r.all_valid());
  ASSERT_EQ(r.certificates.size(), 2u);
  EXPECT_LT(r.x_interval.width(), inverse_power(10, 60));
  EXPECT_TRUE(kUnit.contains(r.x_interval));
  for (const auto& c : r.certificates) EXPECT_TRUE(validate_certificate(c.certificate, c.prefix));
}

INSTANTIATE_TEST_SUITE_P(Functions, SingleRun, ::testing::Values("x", "2*x+1/3", "x^2", "exp(x)", "sin(x)"));

TEST(Zigzag, ImagePrefixMatchesFunction) {
  ConstructionResult r = run_single(parse("x^2"), kUnit, 10, 80, 64, {});
  ASSERT_EQ(r.status, RunStatus::Complete);
  const CertifiedPrefix* y = nullptr;
  for (const auto& c : r.certificates)
    if (c.k == 1) y = &c;
  ASSERT_NE(y, nullptr);
  Rational x = r.x_interval.midpoint();
  DigitPrefix direct = expand(x * x - Rational(floor(x * x)), 10, y->prefix.size());
  EXPECT_EQ(direct.digits, y->prefix.digits);
}

TEST(Zigzag, TranscriptInvariant) {
  FunctionSpec f = parse("exp(x)");
  ConstructionResult r = run_single(f, kUnit, 10, 100, 64, {});
  ASSERT_FALSE(r.transcript.empty());
  for (const auto& e : r.transcript) {
    if (e.tau_prime == 0) continue;
    Interval fy = eval_enclosure(f, e.x, static_cast<unsigned>(e.tau_prime + 10), 10);
    Rational bound = inverse_power(10, e.tau_prime + 1);
    EXPECT_LT(std::max(abs(fy.hi - e.y), abs(fy.lo - e.y)), bound) << "step " << e.m;
  }
}

TEST(Zigzag, ShiftedInterval) {
  ConstructionResult r = run_single(parse("x^2"), Interval(Rational(-7, 4), Rational(-5, 4)), 10, 40, 64, {});
  ASSERT_EQ(r.status, RunStatus::Complete) << r.message;
  EXPECT_TRUE(r.all_valid());
  EXPECT_TRUE(Interval(Rational(-7, 4), Rational(-5, 4)).contains(r.x_interval));
}

TEST(Zigzag, BudgetReported) {
  ConstructionLimits lim;
  lim.max_digits = 20;
  ConstructionResult r = run_single(parse("exp(x)"), kUnit, 10, 200, 64, lim);
  EXPECT_NE(r.status, RunStatus::Complete);
}

TEST(Zigzag, ConstantFunctionRejected) {
  EXPECT_THROW(run_single(parse("0*x+1/2"), kUnit, 10, 20, 8, {}), WitnessNotFound);
}

TEST(Zigzag, SmallFamily) {
  ConstructionResult r = run_family({parse("x"), parse("2*x")}, kUnit, 10, 3, {});
  EXPECT_EQ(r.iterations, 3u);
  EXPECT_TRUE(r.all_valid());
  for (std::size_t i = 1; i < r.transcript.size(); ++i) {
    Rational step = abs(r.transcript[i].x - r.transcript[i - 1].x);
    EXPECT_LT(step, inverse_power(2, r.transcript[i].m + 1));
  }
}

TEST(Zigzag, MultiBaseIdentity) {
  ConstructionResult r = run_family_multibase({parse("x")}, kUnit, {2, 3}, 2, {});
  EXPECT_EQ(r.iterations, 2u);
  EXPECT_EQ(r.certificates.size(), 2u);
  EXPECT_TRUE(r.all_valid());
}
