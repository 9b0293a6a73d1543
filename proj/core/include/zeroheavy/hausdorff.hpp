#pragma once

#include <cstddef>
#include <vector>

#include "zeroheavy/rational.hpp"

namespace zeroheavy {

/// Words of length M over {0..b-1} whose zero fraction is at least 1 - eps (binomial sum).
Integer count_omega(unsigned b, std::size_t M, const Rational& eps);

/// eps*M * binom(M, ceil((1-eps)M)) * (b-1)^ceil(eps*M).
Rational omega_upper_bound(unsigned b, std::size_t M, const Rational& eps);

/// Smallest M from which omega_upper_bound dominates count_omega for every base:
/// ceil((1-eps) / (eps (1-2eps))).
std::size_t omega_bound_threshold(const Rational& eps);

/// gamma(x) = -x ln x - (1-x) ln(1-x), enclosure of width about 2^-bits; exact 0 at 0 and 1.
Interval binary_entropy(const Rational& x, unsigned long bits = 128);

/// Certified enclosure of base^x for rational x.
Interval power_enclosure(unsigned base, const Rational& x, unsigned long bits);

struct EpsilonChoice {
  Rational epsilon;
  /// Lower bound of s ln(b)/2 - (2 gamma(eps) + eps ln(b-1)); positive.
  Rational margin;
  /// From this M on, |Omega_M^eps| <= exp((2 gamma(eps) + eps ln(b-1)) M) is certified.
  std::size_t m0 = 0;
};

/// Halves eps from 1/4 until 2 gamma(eps) + eps ln(b-1) < s ln(b)/2 holds with certified margin.
EpsilonChoice epsilon_for_s(const Rational& s, unsigned b, unsigned max_halvings = 64);

/// Smallest M with (1-eps)/(1-2eps) <= exp(M gamma(eps)); zero-heavy count bound holds from there.
std::size_t entropy_bound_threshold(const Rational& eps, unsigned b);

/// True when 2 gamma(eps) + eps ln(b-1) < s ln(b)/2 is certified.
bool epsilon_valid(const Rational& s, unsigned b, const Rational& eps);

struct CoverRow {
  std::size_t M = 0;
  Integer count;
  Rational cost;  // upper bound of 2^s |Omega_M^eps| b^(-sM)
};

struct CoverBoundReport {
  unsigned base = 2;
  Rational s;
  Rational epsilon;
  std::size_t K = 0;
  std::size_t M_cap = 0;  // last exact row
  std::size_t m0 = 0;
  bool epsilon_valid = false;
  std::vector<CoverRow> rows;
  Rational tail;      // upper bound of the geometric tail past M_cap
  Rational total;     // rows + tail
  Interval formula;   // enclosure of 2^s b^(-Ks/2) / (1 - b^(-s/2))
};

/// Cover-cost bound for the zero-heavy set. Rows are exact up to max(M_cap, m0 - 1); the tail
/// past that uses |Omega_M| <= b^(sM/2).
CoverBoundReport cover_cost(unsigned b, const Rational& s, const Rational& eps, std::size_t K, std::size_t M_cap);

}  // namespace zeroheavy
