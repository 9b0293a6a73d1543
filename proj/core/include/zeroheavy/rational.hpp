#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace zeroheavy {

/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonicalising constructor for n/d.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
Integer ipow(const Integer& base, unsigned long exponent);
Rational pow_int(const Rational& base, long exponent);
/// base^(-exponent) as an exact rational.
Rational inverse_power(unsigned long base, unsigned long exponent);

/// "p/q" form (always with a denominator).
std::string to_string(const Rational& q);

/// Parses "p/q", "-p/q", integers and terminating decimals ("-0.125").
/// Exponent notation and other floating-point forms are rejected.
Rational parse_rational(std::string_view text);

/// Fixed-point decimal rendering with `places` fractional digits, truncated
/// toward zero. For human-readable output only.
std::string to_decimal(const Rational& q, unsigned places);

/// True when the denominator is a power of two.
bool is_dyadic(const Rational& q);

/// Closed interval [lo, hi] with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& x) { return Interval(x, x); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  /// Strict inclusion in the open interval (lo, hi).
  bool interior_contains(const Interval& other) const { return lo < other.lo && other.hi < hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
std::string to_string(const Interval& iv);

}  // namespace zeroheavy
