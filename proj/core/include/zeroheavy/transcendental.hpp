#pragma once

#include "zeroheavy/rational.hpp"

namespace zeroheavy {

// Certified enclosures of elementary functions at rational or interval
// arguments. `bits` controls the absolute accuracy: results are at most a few
// units of 2^-bits wider than the true image. All arithmetic is integer
// fixed-point with outward rounding; no floating point is involved.

Interval exp_enclosure(const Rational& q, unsigned long bits);
/// Throws DomainError for q <= 0.
Interval ln_enclosure(const Rational& q, unsigned long bits);
Interval sin_enclosure(const Rational& q, unsigned long bits);
Interval cos_enclosure(const Rational& q, unsigned long bits);
Interval pi_enclosure(unsigned long bits);

Interval exp_enclosure(const Interval& x, unsigned long bits);
/// Throws DomainError unless x.lo > 0.
Interval ln_enclosure(const Interval& x, unsigned long bits);
Interval sin_enclosure(const Interval& x, unsigned long bits);
Interval cos_enclosure(const Interval& x, unsigned long bits);

}  // namespace zeroheavy
