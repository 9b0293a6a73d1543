#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "zeroheavy/digits.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/rational.hpp"

namespace zeroheavy {

/// Maps the unit cell (0,1) onto the user's interval: x = sign * (cell + u).
struct Conjugation {
  Integer cell = 0;
  int sign = 1;

  Rational to_original(const Rational& u) const;
  Interval to_original(const Interval& u) const;
  /// phi(sign * (cell + x)) as a function of the unit-cell coordinate.
  FunctionSpec conjugate(const FunctionSpec& f) const;
  bool identity() const { return cell == 0 && sign == 1; }
  std::string describe() const;
};

struct NormalizedDomain {
  Conjugation conjugation;
  Interval unit;  // open interval inside (0,1)
};

/// Picks the unit cell holding the larger part of I and returns I restricted to it.
NormalizedDomain normalize_domain(const Interval& I);

/// A T' element together with the integer part and sign that place it on the real line.
struct Target {
  TPrimeNumber tprime;
  Integer integer_part;
  int sign = 1;

  Rational value() const;  // sign * (integer_part + tprime.value())
};

struct TargetQuery {
  unsigned base = 10;
  Interval window;                  // open window of admissible real values
  std::optional<Interval> outer;    // enclosing band; the new band must nest strictly inside
  std::size_t min_k = 2;            // smallest admissible tau'
  std::size_t max_k = 2048;
  std::size_t checkpoint_index = 1; // stem tau must satisfy (k - 1) >= index * tau
};

/// Smallest-k T' target in the window, nearest the window centre among ties.
/// The band value +- base^-(k+1) must fit in `outer` and keep the same integer part.
std::optional<Target> find_target(const TargetQuery& q);

/// Element of T (multiple of base^-L) strictly inside `open_range` with the smallest
/// level L >= min_level, nearest to `prefer`. Returns the value and L.
std::optional<std::pair<Rational, std::size_t>> find_t_point(const Interval& open_range, unsigned base,
                                                             std::size_t min_level, std::size_t max_level,
                                                             const Rational& prefer);

}  // namespace zeroheavy
