#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zeroheavy/digits.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/oracle.hpp"
#include "zeroheavy/rational.hpp"
#include "zeroheavy/targets.hpp"

namespace zeroheavy {

struct ConstructionLimits {
  /// Largest digit position any interval, target or prefix may require.
  std::size_t max_digits = 2048;
  /// Cap on bisection / Newton iterations when solving phi(x) = y.
  std::size_t max_solver_iterations = 200000;
  OracleOptions oracle{};
};

/// Scheduler: sigma(N^2 + j) = j + 1 for 0 <= j <= 2N.
std::size_t sigma(std::size_t m);

/// Per (function, base) bookkeeping: the current T' approximant and its band.
struct ChannelState {
  std::size_t k = 1;  // 1-based function index
  unsigned base = 10;
  std::size_t visits = 0;
  std::optional<Target> target;
  std::size_t band_exponent = 0;  // band = target +- base^-band_exponent
  std::vector<std::size_t> checkpoints;

  bool visited() const { return target.has_value(); }
  Interval band() const;
};

struct TranscriptEntry {
  std::size_t m = 0;
  std::size_t k = 0;
  unsigned base = 10;
  std::size_t tau_prime = 0;
  std::size_t x_level = 0;  // tau of the T point opening the x-interval (single mode)
  Rational x_width;
  Rational y_width;
  Rational x;  // original coordinates
  Rational y;  // the T' approximant, signed
};

struct ZigzagState {
  unsigned base = 10;
  std::size_t m = 0;
  Interval x_interval;  // unit-cell coordinates
  Rational x_current;   // unit-cell coordinates
  Conjugation conjugation;
  std::vector<FunctionSpec> functions;  // conjugated into the unit cell
  std::vector<std::string> labels;      // as given by the caller
  std::vector<ChannelState> channels;
  std::vector<std::size_t> x_checkpoints;  // single mode only
  std::vector<TranscriptEntry> transcript;
  ConstructionLimits limits;
  std::size_t target_digits = 0;
  std::size_t x_level = 0;  // tau level of the latest T point (single mode)
  bool finished = false;
  /// Region around x_current whose image is certified inside the current band (single mode).
  std::optional<Interval> safe_region;
};

enum class RunStatus { Complete, MaxSteps, BudgetExhausted };

std::string to_string(RunStatus s);

struct CertifiedPrefix {
  std::string label;  // "x" or "k=<index>"
  std::size_t k = 0;  // 0 for x
  unsigned base = 10;
  std::string function;
  DigitPrefix prefix;
  ZeroRunCertificate certificate;
  bool valid = false;
};

struct ConstructionResult {
  RunStatus status = RunStatus::Complete;
  std::string message;
  Conjugation conjugation;
  Interval x_interval;  // final candidate region, original coordinates
  std::vector<DigitPrefix> x_prefixes;  // one per base, digits of |x| mod 1
  std::vector<CertifiedPrefix> certificates;
  std::size_t iterations = 0;
  std::vector<TranscriptEntry> transcript;

  bool all_valid() const;
  const DigitPrefix& x_prefix() const { return x_prefixes.front(); }
};

ZigzagState init_single(const FunctionSpec& f, const Interval& I, unsigned base, std::size_t target_digits,
                        const ConstructionLimits& limits = {});
/// One round: shrink the x-interval around the last preimage, then pick the next T' target.
void step_single(ZigzagState& state);
ConstructionResult run_single(const FunctionSpec& f, const Interval& I, unsigned base, std::size_t target_digits,
                              std::size_t max_steps, const ConstructionLimits& limits = {});

ZigzagState init_family(const std::vector<FunctionSpec>& fs, const Interval& I, const std::vector<unsigned>& bases,
                        const ConstructionLimits& limits = {});
/// Algorithmic update servicing channel `channel` (0-based) at step m+1.
void step_algorithmic(ZigzagState& state, std::size_t channel);
ConstructionResult run_family(const std::vector<FunctionSpec>& fs, const Interval& I, unsigned base,
                              std::size_t max_steps, const ConstructionLimits& limits = {});
ConstructionResult run_family_multibase(const std::vector<FunctionSpec>& fs, const Interval& I,
                                        const std::vector<unsigned>& bases, std::size_t max_steps,
                                        const ConstructionLimits& limits = {});

namespace detail {
/// Point x in [lo, hi] with |f(x) - y| < tol, given f(lo) - y and f(hi) - y of opposite sign.
Rational solve_level(const FunctionSpec& f, Rational lo, Rational hi, const Rational& y, const Rational& tol,
                     unsigned base, const ConstructionLimits& limits);
/// Largest power-of-two radius delta such that f maps [x - delta, x + delta] into the open band
/// and the ball stays inside `container`.
std::optional<Rational> certified_radius(const std::vector<std::pair<const FunctionSpec*, Interval>>& constraints,
                                         const Rational& x, const Interval& container, Rational start,
                                         unsigned base, std::size_t digits, std::size_t max_halvings);
/// Builds a certificate from the checkpoints that fit the prefix; invalid if any does not.
CertifiedPrefix certify(std::string label, std::size_t k, std::string function, DigitPrefix prefix,
                        const std::vector<std::size_t>& checkpoints);
/// Digits of |phi(X)| mod 1 common to the whole enclosure, clipped to the channel band.
DigitPrefix image_prefix(const FunctionSpec& phi, const Interval& X, const ChannelState& ch,
                         const ConstructionLimits& limits);
}  // namespace detail

}  // namespace zeroheavy
