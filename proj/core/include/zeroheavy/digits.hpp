#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroheavy/rational.hpp"

namespace zeroheavy {

/// First M digits of a real in [0,1) in a given base. `exact` is set when the
/// number's (finite-convention) expansion terminates within the prefix.
struct DigitPrefix {
  unsigned base = 10;
  std::vector<std::uint32_t> digits;
  bool exact = false;

  std::size_t size() const { return digits.size(); }
  friend bool operator==(const DigitPrefix&, const DigitPrefix&) = default;
};

/// First M base-b digits of q in [0,1) by exact long division. Terminating
/// expansions are always used, so 1/2 in base 10 is 0.5000..., never 0.4999...
DigitPrefix expand(const Rational& q, unsigned base, std::size_t M);

/// Exact value 0.d1 d2 ... dM of a prefix.
Rational reassemble(const DigitPrefix& prefix);

/// Relative frequency of digit d among the first M digits.
Rational lambda_freq(const DigitPrefix& prefix, std::uint32_t d, std::size_t M);

/// A number in [0,1) with terminating base-b expansion. `length` is the
/// position of the last non-zero digit (0 for the number 0).
class FiniteExpansionNumber {
 public:
  /// Throws DomainError if q is outside [0,1) or does not terminate in base.
  static FiniteExpansionNumber from_rational(const Rational& q, unsigned base);
  /// Returns nullopt instead of throwing when q does not terminate.
  static std::optional<FiniteExpansionNumber> try_from_rational(const Rational& q, unsigned base);

  const Rational& value() const { return value_; }
  unsigned base() const { return base_; }
  std::size_t length() const { return length_; }

  friend bool operator==(const FiniteExpansionNumber&, const FiniteExpansionNumber&) = default;

 private:
  FiniteExpansionNumber(Rational v, unsigned b, std::size_t len) : value_(std::move(v)), base_(b), length_(len) {}
  Rational value_;
  unsigned base_ = 10;
  std::size_t length_ = 0;
};

/// Element of T': stem + base^(-k) with k > tau(stem)^2 + 1.
class TPrimeNumber {
 public:
  TPrimeNumber(FiniteExpansionNumber stem, std::size_t k);

  const FiniteExpansionNumber& stem() const { return stem_; }
  std::size_t k() const { return k_; }
  unsigned base() const { return stem_.base(); }
  Rational value() const;

  friend bool operator==(const TPrimeNumber&, const TPrimeNumber&) = default;

 private:
  FiniteExpansionNumber stem_;
  std::size_t k_;
};

std::size_t tau(const FiniteExpansionNumber& x);
/// Throws ConstraintError when k <= tau(stem)^2 + 1.
TPrimeNumber make_tprime(const FiniteExpansionNumber& stem, std::size_t k);
std::size_t tau_prime(const TPrimeNumber& y);
/// Splits q in (0,1) as stem + base^(-K); nullopt when q is not in T'.
std::optional<TPrimeNumber> decompose_tprime(const Rational& q, unsigned base);

struct Checkpoint {
  std::size_t length = 0;
  Rational frequency;
  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Zero frequencies of an emitted prefix at a list of checkpoints.
struct ZeroRunCertificate {
  unsigned base = 10;
  std::vector<Checkpoint> checkpoints;
  friend bool operator==(const ZeroRunCertificate&, const ZeroRunCertificate&) = default;
};

/// Records Lambda_{b,0,L}(prefix) for each L. Throws DomainError for L = 0 or
/// L beyond the prefix.
ZeroRunCertificate zero_run_certificate(const DigitPrefix& prefix, const std::vector<std::size_t>& checkpoints);

/// The m-th checkpoint (1-based) carries frequency >= 1 - 1/m.
bool certificate_meets_schedule(const ZeroRunCertificate& cert);

/// Recomputes every checkpoint from `prefix` and checks the schedule.
bool validate_certificate(const ZeroRunCertificate& cert, const DigitPrefix& prefix);

/// Digits shared by every point of `range`, which must lie in [0,1).
/// At most `max_digits` digits are produced.
DigitPrefix common_prefix(const Interval& range, unsigned base, std::size_t max_digits);

/// Image of an interval under y -> |y| mod 1 when that map is continuous and
/// increasing on it (no integer strictly inside |range|); nullopt otherwise.
std::optional<Interval> fractional_magnitude(const Interval& range);

/// Plain-text digit file: header `base=<b> length=<M> exact=<0|1>` followed by
/// one line of digits (0-9a-z for bases up to 36, space separated otherwise).
std::string format_digit_file(const DigitPrefix& prefix);
DigitPrefix parse_digit_file(std::string_view text);

}  // namespace zeroheavy
