#include "zeroheavy/transcendental.hpp"

#include <algorithm>
#include <utility>

#include "zeroheavy/errors.hpp"

namespace zeroheavy {
namespace {

// [lo, hi] * 2^-scale, rounded outward after every operation.
struct Fixed {
  Integer lo;
  Integer hi;
};

class FixedContext {
 public:
  explicit FixedContext(unsigned long scale) : scale_(scale) {}

  unsigned long scale() const { return scale_; }

  Fixed from_rational(const Rational& q) const {
    Integer n = q.get_num();
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), scale_);
    Fixed f;
    mpz_fdiv_q(f.lo.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
    mpz_cdiv_q(f.hi.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
    return f;
  }

  Fixed one() const {
    Integer u(1);
    mpz_mul_2exp(u.get_mpz_t(), u.get_mpz_t(), scale_);
    return {u, u};
  }

  static Fixed add(const Fixed& a, const Fixed& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  static Fixed sub(const Fixed& a, const Fixed& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  static Fixed neg(const Fixed& a) { return {-a.hi, -a.lo}; }

  Fixed mul(const Fixed& a, const Fixed& b) const {
    Integer p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const Integer* mn = &p[0];
    const Integer* mx = &p[0];
    for (const auto& v : p) {
      if (v < *mn) mn = &v;
      if (v > *mx) mx = &v;
    }
    return round_down_up(*mn, *mx);
  }

  Fixed square(const Fixed& a) const {
    if (a.lo <= 0 && a.hi >= 0) {
      Integer m = std::max(Integer(-a.lo), a.hi);
      return round_down_up(Integer(0), Integer(m * m));
    }
    Integer x = a.lo * a.lo, y = a.hi * a.hi;
    return x < y ? round_down_up(x, y) : round_down_up(y, x);
  }

  static Fixed div_ui(const Fixed& a, unsigned long n) {
    Fixed r;
    mpz_fdiv_q_ui(r.lo.get_mpz_t(), a.lo.get_mpz_t(), n);
    mpz_cdiv_q_ui(r.hi.get_mpz_t(), a.hi.get_mpz_t(), n);
    return r;
  }

  static Fixed mul_si(const Fixed& a, long n) {
    Integer x = a.lo * n, y = a.hi * n;
    return x <= y ? Fixed{x, y} : Fixed{y, x};
  }

  static Fixed widen(const Fixed& a, const Integer& r) { return {a.lo - r, a.hi + r}; }

  static Integer magnitude(const Fixed& a) { return std::max(Integer(abs(a.lo)), Integer(abs(a.hi))); }

  Interval to_interval(const Fixed& a) const {
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), scale_);
    return Interval(make_rational(a.lo, den), make_rational(a.hi, den));
  }

  Fixed clamp_unit(const Fixed& a) const {
    Fixed u = one();
    Fixed r = a;
    if (r.lo < -u.hi) r.lo = -u.hi;
    if (r.hi > u.hi) r.hi = u.hi;
    return r;
  }

 private:
  Fixed round_down_up(const Integer& lo, const Integer& hi) const {
    Fixed r;
    mpz_fdiv_q_2exp(r.lo.get_mpz_t(), lo.get_mpz_t(), scale_);
    mpz_cdiv_q_2exp(r.hi.get_mpz_t(), hi.get_mpz_t(), scale_);
    return r;
  }

  unsigned long scale_;
};

unsigned long bit_length(const Integer& n) {
  return n == 0 ? 0 : static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

Rational scale_down(const Rational& q, unsigned long k) {
  Rational r = q;
  mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), k);
  return r;
}

// Sum of atanh(z) = z + z^3/3 + ... for 0 <= z <= 1/3.
Fixed atanh_series(const FixedContext& ctx, const Rational& z) {
  Fixed zf = ctx.from_rational(z);
  Fixed z2 = ctx.square(zf);
  Fixed power = zf;
  Fixed sum = zf;
  for (unsigned long n = 1;; ++n) {
    power = ctx.mul(power, z2);
    sum = FixedContext::add(sum, FixedContext::div_ui(power, 2 * n + 1));
    if (FixedContext::magnitude(power) <= 1) break;
  }
  // Remaining terms are bounded by power * z^2 / (1 - z^2) <= power / 8.
  return FixedContext::widen(sum, FixedContext::magnitude(power) + 2);
}

// atan(z) for 0 < z <= 1/5; alternating series, remainder below the next term.
Fixed atan_series(const FixedContext& ctx, const Rational& z) {
  Fixed zf = ctx.from_rational(z);
  Fixed z2 = ctx.square(zf);
  Fixed power = zf;
  Fixed sum = zf;
  for (unsigned long n = 1;; ++n) {
    power = ctx.mul(power, z2);
    Fixed term = FixedContext::div_ui(power, 2 * n + 1);
    sum = (n % 2 == 1) ? FixedContext::sub(sum, term) : FixedContext::add(sum, term);
    if (FixedContext::magnitude(power) <= 1) break;
  }
  return FixedContext::widen(sum, FixedContext::magnitude(power) + 2);
}

Fixed pi_fixed(const FixedContext& ctx) {
  Fixed a = FixedContext::mul_si(atan_series(ctx, Rational(1, 5)), 16);
  Fixed b = FixedContext::mul_si(atan_series(ctx, Rational(1, 239)), 4);
  return FixedContext::sub(a, b);
}

std::pair<Interval, Interval> sin_cos_point(const Rational& q, unsigned long bits) {
  if (q == 0) return {Interval::point(Rational(0)), Interval::point(Rational(1))};
  const unsigned long mag = bit_length(ceil(abs(q)));
  const unsigned long k = mag + 4;
  FixedContext ctx(bits + 2 * k + 24);
  Fixed t = ctx.from_rational(scale_down(q, k));
  Fixed t2 = ctx.square(t);

  Fixed s = t, sterm = t;
  for (unsigned long n = 1;; ++n) {
    sterm = FixedContext::div_ui(ctx.mul(sterm, t2), (2 * n) * (2 * n + 1));
    s = (n % 2 == 1) ? FixedContext::sub(s, sterm) : FixedContext::add(s, sterm);
    if (FixedContext::magnitude(sterm) <= 1) break;
  }
  s = FixedContext::widen(s, FixedContext::magnitude(sterm) + 1);

  Fixed c = ctx.one(), cterm = ctx.one();
  for (unsigned long n = 1;; ++n) {
    cterm = FixedContext::div_ui(ctx.mul(cterm, t2), (2 * n - 1) * (2 * n));
    c = (n % 2 == 1) ? FixedContext::sub(c, cterm) : FixedContext::add(c, cterm);
    if (FixedContext::magnitude(cterm) <= 1) break;
  }
  c = FixedContext::widen(c, FixedContext::magnitude(cterm) + 1);

  for (unsigned long i = 0; i < k; ++i) {
    Fixed s2 = FixedContext::mul_si(ctx.mul(s, c), 2);
    Fixed c2 = FixedContext::sub(ctx.one(), FixedContext::mul_si(ctx.square(s), 2));
    s = ctx.clamp_unit(s2);
    c = ctx.clamp_unit(c2);
  }
  return {ctx.to_interval(s), ctx.to_interval(c)};
}

// Hull of the values of sin (phase 1/2) or cos (phase 0) over x, using the
// extremal points (n + phase) * pi.
Interval periodic_interval(const Interval& x, unsigned long bits, bool is_sin) {
  auto at = [&](const Rational& q) {
    auto sc = sin_cos_point(q, bits);
    return is_sin ? sc.first : sc.second;
  };
  if (x.is_point()) return at(x.lo);
  if (x.width() >= 7) return Interval(Rational(-1), Rational(1));
  Interval a = at(x.lo), b = at(x.hi);
  Rational lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
  Interval pi = pi_enclosure(bits + 8);
  const Rational phase = is_sin ? Rational(1, 2) : Rational(0);
  Integer n_lo = floor(x.lo / pi.lo) - 2;
  Integer n_hi = ceil(x.hi / pi.lo) + 2;
  for (Integer n = n_lo; n <= n_hi; ++n) {
    Rational f = Rational(n) + phase;
    Rational p1 = f * pi.lo, p2 = f * pi.hi;
    Interval xn(std::min(p1, p2), std::max(p1, p2));
    if (xn.hi < x.lo || xn.lo > x.hi) continue;
    Integer parity = n % 2;
    if (parity == 0) hi = 1;
    else lo = -1;
  }
  if (lo < -1) lo = -1;
  if (hi > 1) hi = 1;
  return Interval(lo, hi);
}

}  // namespace

Interval exp_enclosure(const Rational& q, unsigned long bits) {
  if (q == 0) return Interval::point(Rational(1));
  const unsigned long mag = bit_length(ceil(abs(q)));
  const unsigned long k = mag + 8;
  unsigned long growth = 0;
  if (q > 0) growth = 2 * ceil(q).get_ui() + 2;
  FixedContext ctx(bits + k + growth + 32);
  Fixed t = ctx.from_rational(scale_down(q, k));
  Fixed sum = ctx.one(), term = ctx.one();
  for (unsigned long n = 1;; ++n) {
    term = FixedContext::div_ui(ctx.mul(term, t), n);
    sum = FixedContext::add(sum, term);
    if (n >= 2 && FixedContext::magnitude(term) <= 1) break;
  }
  // |t| <= 2^-8, so the tail after the last term is below that term.
  sum = FixedContext::widen(sum, FixedContext::magnitude(term) + 1);
  for (unsigned long i = 0; i < k; ++i) sum = ctx.square(sum);
  if (sum.lo < 0) sum.lo = 0;
  return ctx.to_interval(sum);
}

Interval ln_enclosure(const Rational& q, unsigned long bits) {
  if (q <= 0) throw DomainError("ln of non-positive value " + to_string(q));
  if (q == 1) return Interval::point(Rational(0));
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  auto scaled = [&](long ex) {
    Rational m = q;
    if (ex >= 0) mpq_div_2exp(m.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(ex));
    else mpq_mul_2exp(m.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-ex));
    return m;
  };
  Rational m = scaled(e);
  while (m < 1) m = scaled(--e);
  while (m >= 2) m = scaled(++e);
  const unsigned long ebits = bit_length(Integer(e < 0 ? -e : e));
  FixedContext ctx(bits + ebits + 16);
  Fixed lnm = FixedContext::mul_si(atanh_series(ctx, (m - 1) / (m + 1)), 2);
  if (e == 0) return ctx.to_interval(lnm);
  Fixed ln2 = FixedContext::mul_si(atanh_series(ctx, Rational(1, 3)), 2);
  return ctx.to_interval(FixedContext::add(FixedContext::mul_si(ln2, e), lnm));
}

Interval sin_enclosure(const Rational& q, unsigned long bits) { return sin_cos_point(q, bits).first; }
Interval cos_enclosure(const Rational& q, unsigned long bits) { return sin_cos_point(q, bits).second; }

Interval pi_enclosure(unsigned long bits) {
  FixedContext ctx(bits + 16);
  return ctx.to_interval(pi_fixed(ctx));
}

Interval exp_enclosure(const Interval& x, unsigned long bits) {
  if (x.is_point()) return exp_enclosure(x.lo, bits);
  return Interval(exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi);
}

Interval ln_enclosure(const Interval& x, unsigned long bits) {
  if (x.lo <= 0) throw DomainError("ln of enclosure " + to_string(x) + " reaching non-positive values");
  if (x.is_point()) return ln_enclosure(x.lo, bits);
  return Interval(ln_enclosure(x.lo, bits).lo, ln_enclosure(x.hi, bits).hi);
}

Interval sin_enclosure(const Interval& x, unsigned long bits) { return periodic_interval(x, bits, true); }
Interval cos_enclosure(const Interval& x, unsigned long bits) { return periodic_interval(x, bits, false); }

}  // namespace zeroheavy
