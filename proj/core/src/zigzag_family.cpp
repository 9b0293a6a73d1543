#include <algorithm>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/zigzag.hpp"

namespace zeroheavy {
namespace {

std::vector<std::pair<const FunctionSpec*, Interval>> visited_bands(const ZigzagState& st) {
  std::vector<std::pair<const FunctionSpec*, Interval>> out;
  for (const auto& ch : st.channels) {
    if (ch.visited()) out.emplace_back(&st.functions[ch.k - 1], ch.band());
  }
  return out;
}

std::size_t max_band_exponent(const ZigzagState& st) {
  std::size_t e = 1;
  for (const auto& ch : st.channels) e = std::max(e, ch.band_exponent);
  return e;
}

std::size_t bit_length(const Rational& q) {
  Integer inv = ceil(Rational(1) / q);
  return mpz_sizeinbase(inv.get_mpz_t(), 2);
}

// Ball around x_current, radius a power of two below `start`, on which every visited band holds.
Interval persistence_ball(const ZigzagState& st, const Rational& start) {
  auto c = visited_bands(st);
  std::optional<Rational> delta;
  if (c.empty()) {
    delta = detail::certified_radius({}, st.x_current, st.x_interval, start, st.base, 1, 512);
  } else {
    delta = detail::certified_radius(c, st.x_current, st.x_interval, start, st.base, max_band_exponent(st) + 2, 512);
  }
  if (!delta) throw InvariantViolation("cannot certify a neighbourhood on which all visited bands persist");
  return Interval(st.x_current - *delta, st.x_current + *delta);
}

std::string channel_label(const ZigzagState& st, const ChannelState& ch) {
  std::string s = "k=" + std::to_string(ch.k);
  bool multi = std::any_of(st.channels.begin(), st.channels.end(),
                           [&](const ChannelState& o) { return o.base != st.channels.front().base; });
  if (multi) s += ",b=" + std::to_string(ch.base);
  return s;
}

}  // namespace

ZigzagState init_family(const std::vector<FunctionSpec>& fs, const Interval& I, const std::vector<unsigned>& bases,
                        const ConstructionLimits& limits) {
  if (fs.empty()) throw DomainError("family construction needs at least one function");
  if (bases.empty()) throw DomainError("family construction needs at least one base");
  for (unsigned b : bases) {
    if (b < 2) throw DomainError("base must be at least 2");
  }
  NormalizedDomain nd = normalize_domain(I);
  ZigzagState st;
  st.base = bases.front();
  st.conjugation = nd.conjugation;
  st.limits = limits;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    st.functions.push_back(nd.conjugation.conjugate(fs[k]));
    st.labels.push_back(fs[k].to_string());
    for (unsigned b : bases) st.channels.push_back(ChannelState{k + 1, b, 0, std::nullopt, 0, {}});
  }
  const Rational q = nd.unit.width() / 4;
  st.x_interval = Interval(nd.unit.lo + q, nd.unit.hi - q);
  st.x_current = nd.unit.midpoint();
  st.m = 0;
  return st;
}

void step_algorithmic(ZigzagState& st, std::size_t channel) {
  if (channel >= st.channels.size()) throw DomainError("channel index out of range");
  const std::size_t s = st.m + 1;
  ChannelState& ch = st.channels[channel];
  const FunctionSpec& phi = st.functions[ch.k - 1];

  // (a) neighbourhood of x^(m) on which every visited band persists
  const Interval D = persistence_ball(st, inverse_power(2, s + 2));

  // (b) largest monotone piece of D
  const unsigned bits = static_cast<unsigned>(bit_length(D.width()) + 16);
  CriticalPointSet cps = critical_points(phi, D, bits, st.limits.oracle);
  Interval piece = D;
  {
    Rational cursor = D.lo;
    Rational best_w = -1;
    std::vector<Interval> gaps;
    for (const auto& e : cps.enclosures) {
      if (e.lo > cursor) gaps.emplace_back(cursor, e.lo);
      cursor = std::max(cursor, e.hi);
    }
    if (D.hi > cursor) gaps.emplace_back(cursor, D.hi);
    for (const auto& g : gaps) {
      if (g.width() > best_w) {
        best_w = g.width();
        piece = g;
      }
    }
    if (best_w <= 0) throw WitnessNotFound("no monotone piece of positive length in " + to_string(D));
  }
  const Rational z1 = piece.lo + piece.width() / 8;
  const Rational z2 = piece.hi - piece.width() / 8;

  // (c) precision at which the two values separate by more than 4 eps, then a T' target near the middle
  unsigned p = 1;
  Interval v1, v2;
  Rational eps;
  for (;;) {
    if (p > st.limits.max_digits) throw BudgetExhausted("values of phi_" + std::to_string(ch.k) +
                                                        " do not separate within the digit budget");
    eps = inverse_power(ch.base, p);
    v1 = eval_enclosure(phi, z1, p, ch.base, st.limits.oracle);
    v2 = eval_enclosure(phi, z2, p, ch.base, st.limits.oracle);
    if (abs(v1.midpoint() - v2.midpoint()) > 4 * eps) break;
    p = p < 8 ? p + 1 : p + p / 2;
  }
  const Rational centre = (v1.midpoint() + v2.midpoint()) / 2;
  TargetQuery q;
  q.base = ch.base;
  q.window = Interval(centre - eps, centre + eps);
  q.min_k = s + 1;
  if (ch.visited()) {
    q.outer = ch.band();
    q.min_k = std::max(q.min_k, ch.target->tprime.k() + 1);
  }
  q.max_k = st.limits.max_digits;
  q.checkpoint_index = ch.visits + 1;
  std::optional<Target> t = find_target(q);
  if (!t) {
    throw BudgetExhausted("step " + std::to_string(s) + ": no T' target for phi_" + std::to_string(ch.k) +
                          " in base " + std::to_string(ch.base) + " within " + std::to_string(q.max_k) + " digits");
  }
  const std::size_t K = t->tprime.k();
  const Rational y = t->value();

  // (d) land x^(m+1) with |phi(x) - y| < base^-(K+1) / 2
  Rational x = detail::solve_level(phi, z1, z2, y, inverse_power(ch.base, K + 1) / 2, ch.base, st.limits);
  if (abs(x - st.x_current) >= inverse_power(2, s + 1)) {
    throw InvariantViolation("step size bound violated at step " + std::to_string(s));
  }

  ch.target = *t;
  ch.band_exponent = K + 1;
  ch.visits += 1;
  ch.checkpoints.push_back(K - 1);
  st.x_interval = D;
  st.x_current = x;
  st.m = s;

  TranscriptEntry e;
  e.m = s;
  e.k = ch.k;
  e.base = ch.base;
  e.tau_prime = K;
  e.x_width = D.width();
  e.y_width = 2 * inverse_power(ch.base, K + 1);
  e.x = st.conjugation.to_original(x);
  e.y = y;
  st.transcript.push_back(std::move(e));
}

ConstructionResult run_family_multibase(const std::vector<FunctionSpec>& fs, const Interval& I,
                                        const std::vector<unsigned>& bases, std::size_t max_steps,
                                        const ConstructionLimits& limits) {
  ZigzagState st = init_family(fs, I, bases, limits);
  ConstructionResult res;
  res.status = RunStatus::Complete;
  try {
    for (std::size_t s = 1; s <= max_steps; ++s) {
      step_algorithmic(st, (sigma(s) - 1) % st.channels.size());
    }
  } catch (const BudgetExhausted& e) {
    res.status = RunStatus::BudgetExhausted;
    res.message = e.what();
  }

  const Interval X = persistence_ball(st, inverse_power(2, st.m + 3));
  res.conjugation = st.conjugation;
  res.iterations = st.m;
  res.transcript = st.transcript;
  res.x_interval = st.conjugation.to_original(X);
  for (unsigned b : bases) res.x_prefixes.push_back(common_prefix(X, b, limits.max_digits + 8));
  for (const auto& ch : st.channels) {
    res.certificates.push_back(detail::certify(channel_label(st, ch), ch.k, st.labels[ch.k - 1],
                                               detail::image_prefix(st.functions[ch.k - 1], X, ch, limits),
                                               ch.checkpoints));
  }
  return res;
}

ConstructionResult run_family(const std::vector<FunctionSpec>& fs, const Interval& I, unsigned base,
                              std::size_t max_steps, const ConstructionLimits& limits) {
  return run_family_multibase(fs, I, {base}, max_steps, limits);
}

}  // namespace zeroheavy
