#include "zeroheavy/cantor.hpp"

#include <map>

#include "zeroheavy/errors.hpp"

namespace zeroheavy {
namespace {

Rational half_power(std::size_t e) { return inverse_power(2, e); }

bool has_one(const TernaryWord& w) {
  for (auto d : w) {
    if (d == 1) return true;
  }
  return false;
}

BinaryValue exact(const Rational& v) { return {v, Interval::point(v)}; }

BinaryValue symmetrize(const BinaryValue& c) {
  Rational lo = std::min(c.enclosure.lo, Rational(1 - c.enclosure.hi));
  Rational hi = std::min(c.enclosure.hi, Rational(1 - c.enclosure.lo));
  Rational a = std::min(c.approximant, Rational(1 - c.approximant));
  return {a, Interval(lo, hi)};
}

// Sum over r of 2^{-r P_{r-1}} C_s(w_r) for the given words, plus P_j.
std::pair<Rational, std::size_t> block_sum(const std::vector<TernaryWord>& words) {
  Rational v(0);
  std::size_t P = 0;
  for (std::size_t r = 1; r <= words.size(); ++r) {
    const TernaryWord& w = words[r - 1];
    v += half_power(r * P) * cantor_Cs(TernaryDigits::word(w)).approximant;
    P += w.size();
  }
  return {v, P};
}

std::uint8_t small(unsigned long d) { return static_cast<std::uint8_t>(d); }
std::uint8_t small(const Integer& d) { return static_cast<std::uint8_t>(d.get_ui()); }

template <class Int>
void divide(Int num, Int den, TernaryWord& prefix, TernaryWord& cycle, bool& terminates) {
  std::map<Int, std::size_t> seen;
  TernaryWord digits;
  Int r = num;
  while (true) {
    if (r == 0) {
      prefix = std::move(digits);
      terminates = true;
      return;
    }
    auto it = seen.find(r);
    if (it != seen.end()) {
      prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      cycle.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      terminates = false;
      return;
    }
    seen.emplace(r, digits.size());
    r *= 3;
    Int d = r / den;
    r -= d * den;
    digits.push_back(small(d));
  }
}

}  // namespace

TernaryWord parse_ternary_word(std::string_view s) {
  TernaryWord w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '2') throw ParseError("ternary digit expected", i);
    w.push_back(static_cast<std::uint8_t>(s[i] - '0'));
  }
  return w;
}

std::string to_string(const TernaryWord& w) {
  std::string s;
  for (auto d : w) s.push_back(static_cast<char>('0' + d));
  return s;
}

TernaryDigits TernaryDigits::word(TernaryWord w) {
  for (auto d : w) {
    if (d > 2) throw DomainError("ternary digit out of range");
  }
  return TernaryDigits(std::move(w), {}, Tail::Zeros);
}

TernaryDigits TernaryDigits::periodic(TernaryWord prefix, TernaryWord cycle) {
  for (auto d : prefix) {
    if (d > 2) throw DomainError("ternary digit out of range");
  }
  for (auto d : cycle) {
    if (d > 2) throw DomainError("ternary digit out of range");
  }
  bool zero_cycle = true;
  for (auto d : cycle) zero_cycle = zero_cycle && d == 0;
  if (zero_cycle) return TernaryDigits(std::move(prefix), {}, Tail::Zeros);
  return TernaryDigits(std::move(prefix), std::move(cycle), Tail::Cycle);
}

TernaryDigits TernaryDigits::truncated(TernaryWord prefix) {
  for (auto d : prefix) {
    if (d > 2) throw DomainError("ternary digit out of range");
  }
  return TernaryDigits(std::move(prefix), {}, Tail::Unknown);
}

TernaryDigits TernaryDigits::from_rational(const Rational& q) {
  if (q < 0 || q > 1) throw DomainError("ternary expansion needs a value in [0,1], got " + to_string(q));
  if (q == 1) return TernaryDigits({}, {2}, Tail::Cycle);
  TernaryWord prefix, cycle;
  bool terminates = false;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (d.fits_ulong_p() && d < (Integer(1) << 61)) {
    divide<unsigned long>(n.get_ui(), d.get_ui(), prefix, cycle, terminates);
  } else {
    divide<Integer>(n, d, prefix, cycle, terminates);
  }
  if (terminates) return TernaryDigits(std::move(prefix), {}, Tail::Zeros);
  return TernaryDigits(std::move(prefix), std::move(cycle), Tail::Cycle);
}

std::optional<std::uint8_t> TernaryDigits::digit(std::size_t i) const {
  if (i == 0) throw DomainError("digit positions start at 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  switch (tail_) {
    case Tail::Zeros: return 0;
    case Tail::Cycle: return cycle_[(i - prefix_.size() - 1) % cycle_.size()];
    case Tail::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> TernaryDigits::finite_ones() const {
  if (tail_ == Tail::Unknown) return std::nullopt;
  if (tail_ == Tail::Cycle && has_one(cycle_)) return std::nullopt;
  std::size_t n = 0;
  for (auto d : prefix_) n += d == 1;
  return n;
}

bool TernaryDigits::infinitely_many_ones() const { return tail_ == Tail::Cycle && has_one(cycle_); }

TernaryDigits TernaryDigits::suffix(std::size_t start) const {
  if (start <= prefix_.size()) {
    return TernaryDigits(TernaryWord(prefix_.begin() + static_cast<std::ptrdiff_t>(start), prefix_.end()), cycle_,
                         tail_);
  }
  switch (tail_) {
    case Tail::Zeros: return TernaryDigits({}, {}, Tail::Zeros);
    case Tail::Unknown: return TernaryDigits({}, {}, Tail::Unknown);
    case Tail::Cycle: {
      std::size_t off = (start - prefix_.size()) % cycle_.size();
      TernaryWord rot(cycle_.begin() + static_cast<std::ptrdiff_t>(off), cycle_.end());
      rot.insert(rot.end(), cycle_.begin(), cycle_.begin() + static_cast<std::ptrdiff_t>(off));
      return TernaryDigits({}, std::move(rot), Tail::Cycle);
    }
  }
  return *this;
}

std::optional<Rational> TernaryDigits::value() const {
  if (tail_ == Tail::Unknown) return std::nullopt;
  Rational v(0);
  Rational w(1);
  for (auto d : prefix_) {
    w /= 3;
    v += w * d;
  }
  if (tail_ == Tail::Cycle) {
    Rational c(0), cw(1);
    for (auto d : cycle_) {
      cw /= 3;
      c += cw * d;
    }
    v += w * c / (1 - cw);
  }
  return v;
}

BinaryValue cantor_C(const TernaryDigits& x) {
  Rational sum(0);
  std::size_t n = 0;
  for (auto d : x.prefix()) {
    ++n;
    if (d == 1) return exact(sum + half_power(n));
    if (d == 2) sum += half_power(n);
  }
  switch (x.tail()) {
    case TernaryDigits::Tail::Zeros: return exact(sum);
    case TernaryDigits::Tail::Unknown: return {sum, Interval(sum, sum + half_power(n))};
    case TernaryDigits::Tail::Cycle: break;
  }
  const TernaryWord& cyc = x.cycle();
  Rational part(0);
  for (std::size_t j = 0; j < cyc.size(); ++j) {
    if (cyc[j] == 1) return exact(sum + half_power(n) * (part + half_power(j + 1)));
    if (cyc[j] == 2) part += half_power(j + 1);
  }
  return exact(sum + half_power(n) * part / (1 - half_power(cyc.size())));
}

BinaryValue cantor_C(const Rational& x) { return cantor_C(TernaryDigits::from_rational(x)); }
BinaryValue cantor_Cs(const TernaryDigits& x) { return symmetrize(cantor_C(x)); }
BinaryValue cantor_Cs(const Rational& x) { return cantor_Cs(TernaryDigits::from_rational(x)); }

OneStrippedDecomposition one_stripped(const TernaryDigits& x, std::size_t depth, std::size_t max_words) {
  OneStrippedDecomposition out;
  out.infinite = x.infinitely_many_ones();
  std::optional<std::size_t> total = x.finite_ones();
  std::size_t limit = depth;
  if (total) limit = x.prefix().size();
  else if (x.tail() == TernaryDigits::Tail::Unknown) limit = std::min(depth, x.prefix().size());
  TernaryWord current;
  std::size_t last_one = 0;
  for (std::size_t i = 1; i <= limit && out.words.size() < max_words; ++i) {
    std::uint8_t d = *x.digit(i);
    current.push_back(d);
    if (d == 1) {
      out.words.push_back(std::move(current));
      current.clear();
      last_one = i;
    }
  }
  if (total && out.words.size() == *total) out.tail = x.suffix(last_one);
  return out;
}

BinaryValue c_hat_finite(const TernaryDigits& x) {
  if (!x.finite_ones()) throw DomainError("c_hat_finite needs an input with finitely many '1's");
  OneStrippedDecomposition dec = one_stripped(x, 0);
  auto [v, P] = block_sum(dec.words);
  const std::size_t m = dec.words.size();
  v += half_power((m + 1) * P) * cantor_Cs(*dec.tail).approximant;
  return exact(v);
}

BinaryValue c_hat(const TernaryDigits& x, std::size_t k) {
  if (k < 1) throw DomainError("approximation level must be at least 1");
  auto total = x.finite_ones();
  if (total && *total < k) return c_hat_finite(x);
  OneStrippedDecomposition dec = one_stripped(x, SIZE_MAX, k);
  auto [v, P] = block_sum(dec.words);
  const std::size_t j = dec.words.size();
  return {v, Interval(v, v + half_power((j + 1) * P))};
}

BinaryValue c_hat(const Rational& x, std::size_t k) { return c_hat(TernaryDigits::from_rational(x), k); }

BinaryValue c_hat_periodic(const Rational& x, std::size_t k) {
  Rational u = x - Rational(floor(x));
  if (u == 0) return exact(Rational(0));
  return c_hat(u, k);
}

ZeroHeavinessWitness zero_heaviness_witness(const TernaryDigits& x, std::size_t m) {
  if (m < 1) throw DomainError("witness needs at least one block");
  OneStrippedDecomposition dec = one_stripped(x, SIZE_MAX, m);
  if (dec.words.size() < m) {
    throw DomainError("only " + std::to_string(dec.words.size()) + " one-stripped blocks available, need " +
                      std::to_string(m));
  }
  auto [v, P] = block_sum(dec.words);
  ZeroHeavinessWitness w;
  std::vector<std::size_t> checkpoints;
  std::size_t partial = 0;
  for (std::size_t r = 1; r <= m; ++r) {
    partial += dec.words[r - 1].size();
    w.block_lengths.push_back(dec.words[r - 1].size());
    checkpoints.push_back((r + 1) * partial);
  }
  w.binary_prefix = expand(v, 2, checkpoints.back());
  w.certificate = zero_run_certificate(w.binary_prefix, checkpoints);
  return w;
}

}  // namespace zeroheavy
