#include "zeroheavy/oracle.hpp"

#include <algorithm>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/transcendental.hpp"

namespace zeroheavy {
namespace {

unsigned long bits_for_digits(unsigned p, unsigned base) {
  unsigned long per_digit = 0;
  for (unsigned b = base; b > 1; b >>= 1) ++per_digit;
  // bit_length(base) >= log2(base)
  if ((base & (base - 1)) != 0) ++per_digit;
  return static_cast<unsigned long>(p) * per_digit + 16;
}

Interval mul(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval::point(a.lo * b.lo);
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval reciprocal(const Interval& a) {
  if (a.contains_zero()) throw DomainError("division by an enclosure containing zero: " + to_string(a));
  return Interval(1 / a.hi, 1 / a.lo);
}

Interval power(const Interval& a, long n) {
  if (n < 0) return reciprocal(power(a, -n));
  if (a.is_point()) return Interval::point(pow_int(a.lo, n));
  Rational lo = pow_int(a.lo, n), hi = pow_int(a.hi, n);
  if (n % 2 == 1) return Interval(lo, hi);
  if (a.lo >= 0) return Interval(lo, hi);
  if (a.hi <= 0) return Interval(hi, lo);
  return Interval(Rational(0), std::max(lo, hi));
}

int certified_sign(const Interval& v) {
  if (v.lo > 0) return 1;
  if (v.hi < 0) return -1;
  if (v.is_point()) return 0;
  return 2;  // undetermined
}

int sign_at(const FunctionSpec& g, const Rational& x, unsigned long bits, const OracleOptions& opts) {
  for (unsigned i = 0; i < opts.refinement_cap && i < 8; ++i) {
    int s = certified_sign(evaluate(g.expression(), Interval::point(x), bits));
    if (s != 2) return s;
    bits *= 2;
  }
  return 2;
}

}  // namespace

Interval evaluate(const ExprPtr& e, const Interval& x, unsigned long bits) {
  switch (e->op) {
    case Op::Const: return Interval::point(e->value);
    case Op::Var: return x;
    case Op::Neg: {
      Interval a = evaluate(e->lhs, x, bits);
      return Interval(-a.hi, -a.lo);
    }
    case Op::Add: {
      Interval a = evaluate(e->lhs, x, bits), b = evaluate(e->rhs, x, bits);
      return Interval(a.lo + b.lo, a.hi + b.hi);
    }
    case Op::Sub: {
      Interval a = evaluate(e->lhs, x, bits), b = evaluate(e->rhs, x, bits);
      return Interval(a.lo - b.hi, a.hi - b.lo);
    }
    case Op::Mul: return mul(evaluate(e->lhs, x, bits), evaluate(e->rhs, x, bits));
    case Op::Div: return mul(evaluate(e->lhs, x, bits), reciprocal(evaluate(e->rhs, x, bits)));
    case Op::Pow: return power(evaluate(e->lhs, x, bits), e->exponent);
    case Op::Exp: return exp_enclosure(evaluate(e->lhs, x, bits), bits);
    case Op::Ln: return ln_enclosure(evaluate(e->lhs, x, bits), bits);
    case Op::Sin: return sin_enclosure(evaluate(e->lhs, x, bits), bits);
    case Op::Cos: return cos_enclosure(evaluate(e->lhs, x, bits), bits);
  }
  throw Error("unreachable expression node");
}

Interval eval_enclosure(const FunctionSpec& f, const Rational& x, unsigned p, unsigned base,
                        const OracleOptions& opts) {
  if (p < 1) throw DomainError("precision must be at least 1");
  const Rational target = inverse_power(base, p);
  unsigned long bits = bits_for_digits(p, base);
  for (unsigned i = 0; i < opts.refinement_cap; ++i) {
    Interval r = evaluate(f.expression(), Interval::point(x), bits);
    if (r.width() <= target) return r;
    bits *= 2;
  }
  throw BudgetExhausted("enclosure of " + f.to_string() + " did not reach width " + to_string(target));
}

Interval eval_interval(const FunctionSpec& f, const Interval& I, unsigned p, unsigned base) {
  return evaluate(f.expression(), I, bits_for_digits(p, base));
}

CriticalPointSet critical_points(const FunctionSpec& f, const Interval& I, unsigned p, const OracleOptions& opts) {
  const FunctionSpec d1 = f.derivative();
  const FunctionSpec d2 = d1.derivative();
  const unsigned long bits = p + 32;
  const Rational min_width = inverse_power(2, p);
  CriticalPointSet out;
  out.domain = I;

  if (I.is_point()) {
    if (certified_sign(evaluate(d1.expression(), I, bits)) == 0) out.enclosures.push_back(I);
    out.complete = true;
    return out;
  }

  // Depth-first, left to right, so candidates come out sorted.
  std::vector<Interval> candidates;
  std::vector<Interval> stack{I};
  std::size_t visited = 0;
  while (!stack.empty()) {
    Interval piece = stack.back();
    stack.pop_back();
    if (++visited > (std::size_t{1} << 22)) throw NonIsolationError("critical point search exceeded its piece budget");
    Interval v = evaluate(d1.expression(), piece, bits);
    if (!v.contains_zero()) continue;
    if (piece.width() <= min_width) {
      candidates.push_back(piece);
      continue;
    }
    Rational m = piece.midpoint();
    stack.emplace_back(m, piece.hi);
    stack.emplace_back(piece.lo, m);
  }

  std::vector<Interval> clusters;
  for (const auto& c : candidates) {
    if (!clusters.empty() && clusters.back().hi == c.lo) clusters.back().hi = c.hi;
    else clusters.push_back(c);
  }

  for (const auto& cl : clusters) {
    int s_lo = sign_at(d1, cl.lo, bits, opts);
    int s_hi = sign_at(d1, cl.hi, bits, opts);
    Interval curvature = evaluate(d2.expression(), cl, bits);
    bool monotone = !curvature.contains_zero();
    if (!monotone || s_lo == 2 || s_hi == 2) {
      if (monotone && s_lo == s_hi && s_lo != 0 && s_lo != 2) continue;
      throw NonIsolationError("cannot certify a single zero of f' in " + to_string(cl));
    }
    if (s_lo == s_hi && s_lo != 0) continue;  // monotone f' keeping its sign: no zero
    if (s_lo == 0) {
      out.enclosures.push_back(Interval::point(cl.lo));
      continue;
    }
    if (s_hi == 0) {
      out.enclosures.push_back(Interval::point(cl.hi));
      continue;
    }
    Interval enc = cl;
    while (enc.width() > min_width) {
      Rational m = enc.midpoint();
      int s = sign_at(d1, m, bits, opts);
      if (s == 0) {
        enc = Interval::point(m);
        break;
      }
      if (s == 2) throw NonIsolationError("sign of f' undetermined at " + to_string(m));
      if (s == s_lo) enc.lo = m;
      else enc.hi = m;
    }
    out.enclosures.push_back(enc);
  }
  out.complete = true;
  return out;
}

DistinctValueWitness distinct_value_witness(const FunctionSpec& f, const Interval& I, unsigned base,
                                            const OracleOptions& opts) {
  if (I.width() <= 0) throw WitnessNotFound("witness search needs an interval of positive length");
  for (unsigned level = 2; level <= opts.witness_levels; ++level) {
    const unsigned p = 4 * level + 4;
    const Rational eps = inverse_power(base, p);
    const Rational step = I.width() / Rational(Integer(1) << level);
    const unsigned long count = (1ul << level) - 1;
    std::vector<Rational> z;
    std::vector<Interval> v;
    z.reserve(count);
    v.reserve(count);
    for (unsigned long j = 1; j <= count; ++j) {
      z.push_back(I.lo + step * Rational(static_cast<unsigned long>(j)));
      v.push_back(eval_enclosure(f, z.back(), p, base, opts));
      if (j >= 2) {
        const Interval& a = v[v.size() - 2];
        const Interval& b = v.back();
        if (abs(a.midpoint() - b.midpoint()) > 4 * eps) {
          return {z[z.size() - 2], z.back(), eps, a, b};
        }
      }
    }
  }
  throw WitnessNotFound("no pair with distinct values found on " + to_string(I) +
                        " (function may be constant there)");
}

}  // namespace zeroheavy
