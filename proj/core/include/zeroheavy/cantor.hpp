#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroheavy/digits.hpp"
#include "zeroheavy/rational.hpp"

namespace zeroheavy {

using TernaryWord = std::vector<std::uint8_t>;

TernaryWord parse_ternary_word(std::string_view s);
std::string to_string(const TernaryWord& w);

/// Ternary digit source: a known prefix followed by zeros, a repeating cycle, or unknown digits.
class TernaryDigits {
 public:
  enum class Tail { Zeros, Cycle, Unknown };

  static TernaryDigits word(TernaryWord w);
  static TernaryDigits periodic(TernaryWord prefix, TernaryWord cycle);
  static TernaryDigits truncated(TernaryWord prefix);
  /// Expansion of q in [0,1] under the finite-expansion convention; 1 is read as 0.222...
  static TernaryDigits from_rational(const Rational& q);

  const TernaryWord& prefix() const { return prefix_; }
  const TernaryWord& cycle() const { return cycle_; }
  Tail tail() const { return tail_; }

  /// 1-based digit; nullopt past the known prefix of a truncated source.
  std::optional<std::uint8_t> digit(std::size_t i) const;
  /// Number of '1's when known to be finite.
  std::optional<std::size_t> finite_ones() const;
  bool infinitely_many_ones() const;
  /// Digits after position `start`.
  TernaryDigits suffix(std::size_t start) const;
  /// Exact value when the tail is known.
  std::optional<Rational> value() const;

 private:
  TernaryDigits(TernaryWord p, TernaryWord c, Tail t) : prefix_(std::move(p)), cycle_(std::move(c)), tail_(t) {}
  TernaryWord prefix_;
  TernaryWord cycle_;
  Tail tail_ = Tail::Zeros;
};

/// Approximant plus a certified enclosure of the true value.
struct BinaryValue {
  Rational approximant;
  Interval enclosure;
  bool exact() const { return enclosure.is_point(); }
};

BinaryValue cantor_C(const TernaryDigits& x);
BinaryValue cantor_C(const Rational& x);
BinaryValue cantor_Cs(const TernaryDigits& x);
BinaryValue cantor_Cs(const Rational& x);

struct OneStrippedDecomposition {
  std::vector<TernaryWord> words;  // each ends in its only '1'
  std::optional<TernaryDigits> tail;  // set when every '1' has been found
  bool infinite = false;              // the source is known to hold infinitely many '1's
  std::size_t ones_found() const { return words.size(); }
  bool complete() const { return tail.has_value(); }
};

/// Splits after each '1'. Scans at most `depth` digits unless the source is known to have
/// finitely many ones, and stops after `max_words` words.
OneStrippedDecomposition one_stripped(const TernaryDigits& x, std::size_t depth,
                                      std::size_t max_words = SIZE_MAX);

/// Enriched Cantor function on inputs with finitely many '1's (exact).
BinaryValue c_hat_finite(const TernaryDigits& x);
/// k-th approximant with enclosure [v, v + 2^-((k+1) P_k)] of the limit value.
BinaryValue c_hat(const TernaryDigits& x, std::size_t k);
BinaryValue c_hat(const Rational& x, std::size_t k);
/// Evaluates at x mod 1.
BinaryValue c_hat_periodic(const Rational& x, std::size_t k);

struct ZeroHeavinessWitness {
  DigitPrefix binary_prefix;  // first L_m binary digits of the enriched value
  ZeroRunCertificate certificate;
  std::vector<std::size_t> block_lengths;
};

/// Checkpoints L_r = (r+1)(|w_1|+...+|w_r|), r = 1..m, in the binary expansion of the enriched value.
ZeroHeavinessWitness zero_heaviness_witness(const TernaryDigits& x, std::size_t m);

}  // namespace zeroheavy
