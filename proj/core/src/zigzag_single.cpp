#include <algorithm>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/zigzag.hpp"

namespace zeroheavy {
namespace {

std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

// Picks the next T' target inside phi(I_x) and solves phi(x2) = y2 on I_x.
void y_substep(ZigzagState& st) {
  ChannelState& ch = st.channels.front();
  const FunctionSpec& phi = st.functions.front();
  DistinctValueWitness w = distinct_value_witness(phi, st.x_interval, st.base, st.limits.oracle);
  Rational z_lo = w.z1, z_hi = w.z2;
  Interval v_lo = w.value1, v_hi = w.value2;
  if (v_lo.midpoint() > v_hi.midpoint()) std::swap(v_lo, v_hi);

  TargetQuery q;
  q.base = st.base;
  q.window = Interval(v_lo.hi, v_hi.lo);
  if (ch.visited()) {
    q.outer = ch.band();
    q.min_k = ch.target->tprime.k() + 1;
  }
  q.max_k = st.limits.max_digits;
  q.checkpoint_index = ch.visits + 1;
  std::optional<Target> t = find_target(q);
  if (!t) throw BudgetExhausted("no T' target within " + std::to_string(q.max_k) + " digits at round " +
                                std::to_string(st.m));
  const std::size_t K = t->tprime.k();
  const Rational y = t->value();
  Rational x2 = detail::solve_level(phi, z_lo, z_hi, y, inverse_power(st.base, K + 3), st.base, st.limits);

  ch.target = *t;
  ch.band_exponent = K + 1;
  ch.visits += 1;
  ch.checkpoints.push_back(K - 1);
  st.x_current = x2;
  st.safe_region.reset();

  TranscriptEntry e;
  e.m = st.m;
  e.k = 1;
  e.base = st.base;
  e.tau_prime = K;
  e.x_level = st.x_level;
  e.x_width = st.x_interval.width();
  e.y_width = 2 * inverse_power(st.base, K + 1);
  e.x = st.conjugation.to_original(x2);
  e.y = y;
  st.transcript.push_back(std::move(e));
}

// Ball around x_current whose image stays in the current band, inside the x-interval.
Interval certified_ball(const ZigzagState& st) {
  const ChannelState& ch = st.channels.front();
  std::vector<std::pair<const FunctionSpec*, Interval>> c{{&st.functions.front(), ch.band()}};
  auto delta = detail::certified_radius(c, st.x_current, st.x_interval, st.x_interval.width(), st.base,
                                        ch.band_exponent + 2, 512);
  if (!delta) throw InvariantViolation("cannot certify a neighbourhood of the current preimage");
  return Interval(st.x_current - *delta, st.x_current + *delta);
}

}  // namespace

ZigzagState init_single(const FunctionSpec& f, const Interval& I, unsigned base, std::size_t target_digits,
                        const ConstructionLimits& limits) {
  if (base < 2) throw DomainError("base must be at least 2");
  NormalizedDomain nd = normalize_domain(I);
  ZigzagState st;
  st.base = base;
  st.conjugation = nd.conjugation;
  st.functions.push_back(nd.conjugation.conjugate(f));
  st.labels.push_back(f.to_string());
  st.channels.push_back(ChannelState{1, base, 0, std::nullopt, 0, {}});
  st.limits = limits;
  st.target_digits = target_digits;
  st.m = 1;

  auto x1 = find_t_point(nd.unit, base, 1, limits.max_digits, nd.unit.midpoint());
  if (!x1) throw BudgetExhausted("no T point inside the construction interval");
  const std::size_t L = x1->second;
  std::size_t f_extra = 1;
  while (x1->first + inverse_power(base, L * L + f_extra) >= nd.unit.hi) ++f_extra;
  if (L * L + f_extra > limits.max_digits) throw BudgetExhausted("initial interval needs too many digits");
  st.x_interval = Interval(x1->first, x1->first + inverse_power(base, L * L + f_extra));
  st.x_current = x1->first;
  st.x_level = L;
  st.x_checkpoints.push_back(L * L);
  y_substep(st);
  return st;
}

void step_single(ZigzagState& st) {
  if (st.finished) return;
  st.m += 1;
  const Interval J = certified_ball(st);
  const Interval open_j = J;

  auto pick = [&](std::size_t min_level) {
    auto r = find_t_point(open_j, st.base, min_level, st.limits.max_digits, st.x_current);
    if (!r) throw BudgetExhausted("no T point of admissible level near the preimage");
    return *r;
  };
  auto x1 = pick(st.m);
  std::size_t L = x1.second;
  if (L * L + 1 < st.target_digits && (L * L + 1) * (L * L + 1) > st.limits.max_digits) {
    x1 = pick(std::max(st.m, ceil_sqrt(st.target_digits)));
    L = x1.second;
  }
  if (L * L + 1 > st.limits.max_digits) {
    throw BudgetExhausted("x-interval at level " + std::to_string(L) + " exceeds the digit budget");
  }
  Rational hi = std::min(Rational(x1.first + inverse_power(st.base, L * L + 1)), J.hi);
  st.x_interval = Interval(x1.first, hi);
  st.x_level = L;
  st.x_checkpoints.push_back(L * L);
  st.safe_region = J;

  if (st.x_interval.width() < inverse_power(st.base, st.target_digits)) {
    st.finished = true;
    return;
  }
  y_substep(st);
}

namespace detail {

CertifiedPrefix certify(std::string label, std::size_t k, std::string function, DigitPrefix prefix,
                        const std::vector<std::size_t>& checkpoints) {
  CertifiedPrefix c;
  c.label = std::move(label);
  c.k = k;
  c.base = prefix.base;
  c.function = std::move(function);
  std::vector<std::size_t> usable;
  bool in_range = true;
  for (std::size_t L : checkpoints) {
    if (L >= 1 && L <= prefix.size()) usable.push_back(L);
    else in_range = false;
  }
  c.certificate = zero_run_certificate(prefix, usable);
  c.prefix = std::move(prefix);
  c.valid = in_range && !checkpoints.empty() && validate_certificate(c.certificate, c.prefix);
  return c;
}

DigitPrefix image_prefix(const FunctionSpec& phi, const Interval& X, const ChannelState& ch,
                         const ConstructionLimits& limits) {
  std::size_t want = ch.band_exponent + 4;
  if (X.width() > 0) {
    std::size_t d = 0;
    for (Rational w = X.width(); w < 1 && d <= limits.max_digits; w *= ch.base) ++d;
    want = std::max(want, d + 4);
  }
  const unsigned p = static_cast<unsigned>(std::min<std::size_t>(want, limits.max_digits + 8));
  Interval img = eval_interval(phi, X, p, ch.base);
  if (ch.visited()) {
    auto cut = intersect(img, ch.band());
    if (cut) img = *cut;
  }
  auto frac = fractional_magnitude(img);
  if (!frac) return DigitPrefix{ch.base, {}, false};
  return common_prefix(*frac, ch.base, limits.max_digits + 8);
}

}  // namespace detail

ConstructionResult run_single(const FunctionSpec& f, const Interval& I, unsigned base, std::size_t target_digits,
                              std::size_t max_steps, const ConstructionLimits& limits) {
  ConstructionResult res;
  ZigzagState st;
  try {
    st = init_single(f, I, base, target_digits, limits);
    std::size_t steps = 1;
    while (!st.finished && steps < max_steps) {
      step_single(st);
      ++steps;
    }
    res.status = st.finished ? RunStatus::Complete : RunStatus::MaxSteps;
    if (!st.finished) res.message = "stopped after " + std::to_string(max_steps) + " steps";
  } catch (const BudgetExhausted& e) {
    res.status = RunStatus::BudgetExhausted;
    res.message = e.what();
    if (st.functions.empty()) {
      res.conjugation = normalize_domain(I).conjugation;
      return res;
    }
  }

  // The final region must carry every band: after a y-substep shrink to a certified ball.
  Interval X = st.x_interval;
  if (!st.safe_region && st.channels.front().visited()) {
    X = certified_ball(st);
  }
  res.conjugation = st.conjugation;
  res.iterations = st.m;
  res.transcript = st.transcript;
  res.x_interval = st.conjugation.to_original(X);
  const std::size_t cap = limits.max_digits + 8;
  DigitPrefix xp = common_prefix(X, base, cap);
  res.x_prefixes.push_back(xp);
  res.certificates.push_back(detail::certify("x", 0, "x", xp, st.x_checkpoints));
  const ChannelState& ch = st.channels.front();
  res.certificates.push_back(detail::certify("k=1", 1, st.labels.front(),
                                             detail::image_prefix(st.functions.front(), X, ch, limits),
                                             ch.checkpoints));
  return res;
}

}  // namespace zeroheavy
