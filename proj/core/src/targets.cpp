#include "zeroheavy/targets.hpp"

#include "zeroheavy/errors.hpp"

namespace zeroheavy {
namespace {

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

}  // namespace

Rational Conjugation::to_original(const Rational& u) const { return Rational(sign) * (Rational(cell) + u); }

Interval Conjugation::to_original(const Interval& u) const {
  Rational a = to_original(u.lo), b = to_original(u.hi);
  return sign > 0 ? Interval(a, b) : Interval(b, a);
}

FunctionSpec Conjugation::conjugate(const FunctionSpec& f) const {
  if (identity()) return f;
  ExprPtr inner = expr::add(expr::constant(Rational(cell)), expr::variable());
  if (sign < 0) inner = expr::neg(inner);
  return f.compose(inner);
}

std::string Conjugation::describe() const {
  std::string s = "x = ";
  if (sign < 0) s += "-(";
  s += cell.get_str() + " + u";
  if (sign < 0) s += ")";
  return s;
}

NormalizedDomain normalize_domain(const Interval& I) {
  if (I.width() <= 0) throw DomainError("construction interval must have positive length");
  NormalizedDomain out;
  Interval mag = I;
  if (I.hi <= 0 || (I.lo < 0 && -I.lo > I.hi)) {
    out.conjugation.sign = -1;
    mag = Interval(-I.hi, -I.lo);
  }
  if (mag.lo < 0) mag.lo = 0;
  Integer n = floor(mag.lo);
  out.conjugation.cell = n;
  Rational hi = mag.hi - n;
  if (hi > 1) hi = 1;
  out.unit = Interval(mag.lo - n, hi);
  return out;
}

Rational Target::value() const { return Rational(sign) * (Rational(integer_part) + tprime.value()); }

std::optional<Target> find_target(const TargetQuery& q) {
  const Interval& w = q.window;
  if (w.width() <= 0) return std::nullopt;
  // Split the window into unit-cell pieces of |y|; search each piece.
  struct Piece {
    int sign;
    Integer n;
    Interval t;  // fractional part range, open
  };
  std::vector<Piece> pieces;
  auto add_magnitude = [&](int sign, Rational lo, Rational hi) {
    if (hi <= lo) return;
    Integer n = floor(lo);
    while (Rational(n) < hi) {
      Rational a = std::max(lo, Rational(n)), b = std::min(hi, Rational(n + 1));
      if (b > a) pieces.push_back({sign, n, Interval(a - n, b - n)});
      n += 1;
      if (pieces.size() > 64) break;
    }
  };
  if (w.hi > 0) add_magnitude(1, std::max(w.lo, Rational(0)), w.hi);
  if (w.lo < 0) add_magnitude(-1, std::max(Rational(-w.hi), Rational(0)), Rational(-w.lo));

  const Rational centre = w.midpoint();
  for (std::size_t k = std::max<std::size_t>(q.min_k, 2); k <= q.max_k; ++k) {
    std::size_t c = std::min(isqrt(k - 2), (k - 1) / std::max<std::size_t>(q.checkpoint_index, 1));
    const Rational unit = inverse_power(q.base, c);
    const Rational tail = inverse_power(q.base, k);
    const Rational margin = tail / q.base;
    std::optional<Target> best;
    Rational best_dist;
    for (const auto& p : pieces) {
      Rational real_centre = Rational(p.sign) * centre - Rational(p.n);
      Integer j0 = round_nearest((real_centre - tail) / unit);
      for (int dj = -1; dj <= 1; ++dj) {
        Integer j = j0 + dj;
        if (j < 0) continue;
        Rational stem = Rational(j) * unit;
        if (stem >= 1) continue;
        Rational t = stem + tail;
        if (!(p.t.lo < t && t < p.t.hi)) continue;
        if (t - margin <= 0 || t + margin >= 1) continue;
        Rational y = Rational(p.sign) * (Rational(p.n) + t);
        if (!(w.lo < y && y < w.hi)) continue;
        if (q.outer && !(q.outer->lo < y - margin && y + margin < q.outer->hi)) continue;
        Rational dist = abs(y - centre);
        if (!best || dist < best_dist) {
          best = Target{TPrimeNumber(FiniteExpansionNumber::from_rational(stem, q.base), k), p.n, p.sign};
          best_dist = dist;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<std::pair<Rational, std::size_t>> find_t_point(const Interval& open_range, unsigned base,
                                                             std::size_t min_level, std::size_t max_level,
                                                             const Rational& prefer) {
  for (std::size_t L = std::max<std::size_t>(min_level, 1); L <= max_level; ++L) {
    const Rational unit = inverse_power(base, L);
    Integer j0 = round_nearest(prefer / unit);
    std::optional<Rational> best;
    for (int dj = -1; dj <= 1; ++dj) {
      Rational v = Rational(j0 + dj) * unit;
      if (!(open_range.lo < v && v < open_range.hi) || v <= 0 || v >= 1) continue;
      if (!best || abs(v - prefer) < abs(*best - prefer)) best = v;
    }
    if (!best) {
      // prefer may sit outside the range; fall back to the first grid point above lo
      Rational v = Rational(floor(open_range.lo / unit) + 1) * unit;
      if (v < open_range.hi && v > 0 && v < 1) best = v;
    }
    if (best) return std::make_pair(*best, L);
  }
  return std::nullopt;
}

}  // namespace zeroheavy
