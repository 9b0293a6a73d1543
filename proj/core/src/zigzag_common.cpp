#include <algorithm>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/zigzag.hpp"

namespace zeroheavy {

std::size_t sigma(std::size_t m) {
  if (m < 1) throw DomainError("sigma is defined for m >= 1");
  std::size_t N = 1;
  while ((N + 1) * (N + 1) <= m) ++N;
  return m - N * N + 1;
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Complete: return "complete";
    case RunStatus::MaxSteps: return "max_steps";
    case RunStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

Interval ChannelState::band() const {
  if (!target) throw InvariantViolation("channel has no approximant yet");
  Rational y = target->value();
  Rational r = inverse_power(base, band_exponent);
  return Interval(y - r, y + r);
}

bool ConstructionResult::all_valid() const {
  if (certificates.empty()) return false;
  return std::all_of(certificates.begin(), certificates.end(), [](const CertifiedPrefix& c) { return c.valid; });
}

namespace detail {
namespace {

// Smallest p with base^-p <= q (q > 0).
unsigned digits_below(const Rational& q, unsigned base) {
  unsigned p = 0;
  Rational v(1);
  while (v > q) {
    v /= base;
    ++p;
  }
  return std::max(p, 1u);
}

// Largest power of two not exceeding q (q > 0).
Rational power_of_two_floor(const Rational& q) {
  Integer inv = ceil(Rational(1) / q);
  std::size_t e = mpz_sizeinbase(inv.get_mpz_t(), 2);
  Rational r = Rational(1) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(e));
  while (r * 2 <= q) r *= 2;
  return r;
}

Rational magnitude(const Interval& v) { return std::max(abs(v.lo), abs(v.hi)); }

}  // namespace

Rational solve_level(const FunctionSpec& f, Rational lo, Rational hi, const Rational& y, const Rational& tol,
                     unsigned base, const ConstructionLimits& limits) {
  if (hi < lo) std::swap(lo, hi);
  const unsigned p = digits_below(tol / 4, base);
  auto residual = [&](const Rational& x) {
    Interval e = eval_enclosure(f, x, p, base, limits.oracle);
    return Interval(e.lo - y, e.hi - y);
  };
  auto close_enough = [&](const Interval& r) { return -tol < r.lo && r.hi < tol; };

  Interval r_lo = residual(lo);
  if (close_enough(r_lo)) return lo;
  Interval r_hi = residual(hi);
  if (close_enough(r_hi)) return hi;
  const int s_lo = r_lo.lo > 0 ? 1 : -1;
  if ((r_hi.lo > 0 ? 1 : -1) == s_lo) throw InvariantViolation("solve_level: no sign change on the bracket");

  // Affine maps are solved in one step.
  const ExprPtr& d = f.derivative_expression();
  if (f.arithmetic_only() && expr::is_constant(d) && d->value != 0) {
    Rational x = lo - r_lo.lo / d->value;
    if (lo <= x && x <= hi && close_enough(residual(x))) return x;
  }

  const FunctionSpec df(d);
  Rational last = abs(r_lo.midpoint()) < abs(r_hi.midpoint()) ? lo : hi;
  Rational last_res = last == lo ? r_lo.midpoint() : r_hi.midpoint();
  Rational prev_width = hi - lo;
  int stalls = 0;
  for (std::size_t it = 0; it < limits.max_solver_iterations; ++it) {
    Rational cand;
    bool newton = false;
    if (stalls < 2) {
      Interval dv = eval_enclosure(df, last, 12, 2, limits.oracle);
      Rational slope = dv.midpoint();
      if (slope != 0 && !dv.contains_zero()) {
        Rational x = last - last_res / slope;
        Rational grain = power_of_two_floor(tol / (8 * (magnitude(dv) + 1)));
        x = Rational(floor(x / grain)) * grain;
        if (lo < x && x < hi) {
          cand = x;
          newton = true;
        }
      }
    }
    if (!newton) cand = (lo + hi) / 2;
    Interval r = residual(cand);
    if (close_enough(r)) return cand;
    if ((r.lo > 0 ? 1 : -1) == s_lo) lo = cand;
    else hi = cand;
    last = cand;
    last_res = r.midpoint();
    Rational width = hi - lo;
    stalls = width * 2 > prev_width ? stalls + 1 : 0;
    if (!newton) stalls = 0;
    prev_width = width;
    if (width == 0) break;
  }
  throw BudgetExhausted("solve_level did not reach tolerance " + to_string(tol));
}

std::optional<Rational> certified_radius(const std::vector<std::pair<const FunctionSpec*, Interval>>& constraints,
                                         const Rational& x, const Interval& container, Rational start,
                                         unsigned base, std::size_t digits, std::size_t max_halvings) {
  Rational room = std::min(Rational(x - container.lo), Rational(container.hi - x));
  if (room <= 0 || start <= 0) return std::nullopt;
  Rational delta = std::min(start, room);
  const unsigned p = static_cast<unsigned>(digits);
  for (const auto& [f, band] : constraints) {
    Interval v = eval_enclosure(*f, x, p, base);
    Rational margin = std::min(Rational(v.lo - band.lo), Rational(band.hi - v.hi));
    if (margin <= 0) return std::nullopt;
    Interval ball(x - delta, x + delta);
    Rational slope = magnitude(eval_interval(f->derivative(), ball, 8, base));
    Rational est = margin / (2 * (slope + 1));
    if (est < delta) delta = est;
  }
  delta = power_of_two_floor(delta);
  for (std::size_t h = 0; h <= max_halvings; ++h, delta /= 2) {
    Interval ball(x - delta, x + delta);
    if (!container.contains(ball)) continue;
    bool ok = true;
    for (const auto& [f, band] : constraints) {
      Interval v = eval_interval(*f, ball, p, base);
      if (!(band.lo < v.lo && v.hi < band.hi)) {
        ok = false;
        break;
      }
    }
    if (ok) return delta;
  }
  return std::nullopt;
}

}  // namespace detail
}  // namespace zeroheavy
