#include <gtest/gtest.h>

#include <random>

#include "zeroheavy/cantor.hpp"
#include "zeroheavy/errors.hpp"

using namespace zeroheavy;

TEST(Ternary, FromRational) {
  TernaryDigits h = TernaryDigits::from_rational(Rational(1, 2));  // 0.111...
  EXPECT_EQ(h.digit(1), 1);
  EXPECT_EQ(h.digit(50), 1);
  EXPECT_TRUE(h.infinitely_many_ones());
  TernaryDigits third = TernaryDigits::from_rational(Rational(1, 3));
  EXPECT_EQ(third.finite_ones(), 1u);
  TernaryDigits one = TernaryDigits::from_rational(Rational(1));
  EXPECT_EQ(one.digit(1), 2);
  EXPECT_EQ(one.digit(99), 2);
  EXPECT_EQ(*TernaryDigits::word(parse_ternary_word("0121")).value(), Rational(16, 81));
  EXPECT_THROW(parse_ternary_word("013"), ParseError);
}

TEST(Cantor, KnownValues) {
  EXPECT_EQ(cantor_C(Rational(1, 3)).approximant, Rational(1, 2));
  EXPECT_EQ(cantor_C(Rational(1, 4)).approximant, Rational(1, 3));
  EXPECT_EQ(cantor_C(Rational(0)).approximant, Rational(0));
  EXPECT_EQ(cantor_C(Rational(1)).approximant, Rational(1));
  EXPECT_EQ(cantor_C(Rational(1, 2)).approximant, Rational(1, 2));
  EXPECT_EQ(cantor_Cs(Rational(3, 4)).approximant, Rational(1, 3));
  EXPECT_EQ(cantor_Cs(Rational(1, 4)).approximant, Rational(1, 3));
  EXPECT_THROW(cantor_C(Rational(3, 2)), DomainError);
}

TEST(Cantor, SymmetryOnRandomRationals) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    unsigned long den = 1 + rng() % 500, num = rng() % (den + 1);
    Rational x = make_rational(Integer(num), Integer(den));
    EXPECT_EQ(cantor_C(Rational(1) - x).approximant, Rational(1) - cantor_C(x).approximant);
    EXPECT_EQ(cantor_Cs(x).approximant, cantor_Cs(Rational(1) - x).approximant);
  }
}

TEST(Cantor, OneStripped) {
  auto d = one_stripped(TernaryDigits::word(parse_ternary_word("21011")), 10);
  ASSERT_EQ(d.words.size(), 3u);
  EXPECT_EQ(to_string(d.words[0]), "21");
  EXPECT_EQ(to_string(d.words[1]), "01");
  EXPECT_EQ(to_string(d.words[2]), "1");
  EXPECT_TRUE(d.complete());
}

TEST(CHat, Endpoints) {
  EXPECT_EQ(c_hat(Rational(0), 4).approximant, Rational(0));
  EXPECT_EQ(c_hat(Rational(1), 4).approximant, Rational(0));
  EXPECT_EQ(c_hat(Rational(2, 3), 3).approximant, Rational(1, 2));
  EXPECT_EQ(c_hat_periodic(Rational(5, 3), 3).approximant, Rational(1, 2));
}

TEST(CHat, LevelOneIsSymmetrizedCantor) {
  for (unsigned i = 0; i <= 200; ++i) {
    Rational x = make_rational(Integer(i), Integer(200u));
    EXPECT_EQ(c_hat(x, 1).approximant, cantor_Cs(x).approximant) << to_string(x);
  }
}

TEST(CHat, NestingAndEnclosure) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    TernaryWord w(30);
    for (auto& d : w) d = static_cast<std::uint8_t>(rng() % 3);
    TernaryDigits x = TernaryDigits::periodic({}, w);
    for (std::size_t k = 1; k < 4; ++k) {
      BinaryValue a = c_hat(x, k), b = c_hat(x, k + 1);
      EXPECT_LE(abs(b.approximant - a.approximant), inverse_power(2, k * k));
      EXPECT_TRUE(a.enclosure.contains(b.enclosure));
    }
  }
}

TEST(CHat, WitnessForHalf) {
  ZeroHeavinessWitness w = zero_heaviness_witness(TernaryDigits::from_rational(Rational(1, 2)), 5);
  std::vector<std::size_t> lengths;
  for (const auto& c : w.certificate.checkpoints) lengths.push_back(c.length);
  EXPECT_EQ(lengths, (std::vector<std::size_t>{2, 6, 12, 20, 30}));
  EXPECT_TRUE(validate_certificate(w.certificate, w.binary_prefix));
}

TEST(CHat, NonConstantOnDyadicIntervals) {
  // every dyadic interval of width >= 3^-8 has two ternary rationals (denominator 3^9) with different values
  const Integer den = ipow(3, 9);
  std::size_t constant = 0;
  for (unsigned j = 0; j <= 12; ++j) {
    const Integer cells = ipow(2, j);
    for (Integer i = 0; i < cells; ++i) {
      Integer a = ceil(make_rational(i * den, cells)), b = floor(make_rational((i + 1) * den, cells));
      Rational first = c_hat(make_rational(a, den), 8).approximant;
      bool differs = false;
      for (Integer t = a + 1; t <= b && !differs; ++t) differs = c_hat(make_rational(t, den), 8).approximant != first;
      if (!differs) ++constant;
    }
  }
  EXPECT_EQ(constant, 0u);
}
