#pragma once

#include <vector>

#include "zeroheavy/expr.hpp"
#include "zeroheavy/rational.hpp"

namespace zeroheavy {

struct OracleOptions {
  /// Maximum number of working-precision doublings per refinement loop.
  unsigned refinement_cap = 64;
  /// Finest grid level (2^level cells) tried by distinct_value_witness.
  unsigned witness_levels = 12;
};

/// Interval extension of `e` over `x` with transcendental kernels run at
/// `bits` of absolute accuracy. Inclusion-isotonic up to that slack.
Interval evaluate(const ExprPtr& e, const Interval& x, unsigned long bits);

/// Enclosure of f(x) of width <= base^-p; degenerate for arithmetic-only f.
Interval eval_enclosure(const FunctionSpec& f, const Rational& x, unsigned p, unsigned base,
                        const OracleOptions& opts = {});

/// Enclosure of f over the whole interval I (true image plus <= base^-p slack).
Interval eval_interval(const FunctionSpec& f, const Interval& I, unsigned p, unsigned base);

/// Enclosures of the zeros of f' inside a queried domain.
struct CriticalPointSet {
  Interval domain;
  /// Pairwise disjoint, ascending, each containing exactly one zero of f'.
  std::vector<Interval> enclosures;
  /// f' has certified constant sign on the domain minus the enclosures.
  bool complete = false;
};

/// Isolates every zero of f' in I to width <= 2^-p by sign-change bisection.
/// Throws NonIsolationError when a cluster cannot be certified at precision p.
CriticalPointSet critical_points(const FunctionSpec& f, const Interval& I, unsigned p,
                                 const OracleOptions& opts = {});

struct DistinctValueWitness {
  Rational z1;
  Rational z2;
  Rational epsilon;
  Interval value1;  // enclosure of f(z1), width <= epsilon
  Interval value2;  // enclosure of f(z2), width <= epsilon
};

/// Two points of I whose epsilon-approximations differ by more than 4*epsilon.
/// Throws WitnessNotFound once the grid and precision budget are spent.
DistinctValueWitness distinct_value_witness(const FunctionSpec& f, const Interval& I, unsigned base,
                                            const OracleOptions& opts = {});

}  // namespace zeroheavy
