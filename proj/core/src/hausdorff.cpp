#include "zeroheavy/hausdorff.hpp"

#include <algorithm>

#include "zeroheavy/errors.hpp"
#include "zeroheavy/transcendental.hpp"

namespace zeroheavy {
namespace {

constexpr unsigned long kBits = 192;

void require_eps(const Rational& eps) {
  if (eps <= 0 || eps * 2 >= 1) throw DomainError("epsilon must lie in (0, 1/2), got " + to_string(eps));
}

Integer binom(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval add(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }

Interval scale(const Rational& c, const Interval& a) { return mul(Interval::point(c), a); }

// 2 gamma(eps) + eps ln(b-1)
Interval entropy_exponent(const Rational& eps, unsigned b, unsigned long bits) {
  Interval g = binary_entropy(eps, bits);
  Interval lhs = scale(Rational(2), g);
  if (b > 2) lhs = add(lhs, scale(eps, ln_enclosure(Rational(b - 1), bits)));
  return lhs;
}

Interval half_s_ln_b(const Rational& s, unsigned b, unsigned long bits) {
  return scale(s / 2, ln_enclosure(Rational(b), bits));
}

}  // namespace

Integer count_omega(unsigned b, std::size_t M, const Rational& eps) {
  if (b < 2) throw DomainError("base must be at least 2");
  if (M < 1) throw DomainError("word length must be at least 1");
  require_eps(eps);
  const Integer k0 = ceil((1 - eps) * Rational(static_cast<unsigned long>(M)));
  Integer total = 0;
  for (std::size_t K = k0.get_ui(); K <= M; ++K) total += binom(M, K) * ipow(Integer(b - 1), M - K);
  return total;
}

Rational omega_upper_bound(unsigned b, std::size_t M, const Rational& eps) {
  if (b < 2) throw DomainError("base must be at least 2");
  if (M < 1) throw DomainError("word length must be at least 1");
  require_eps(eps);
  const Rational m(static_cast<unsigned long>(M));
  const Integer hi = ceil((1 - eps) * m);
  const Integer e = ceil(eps * m);
  return eps * m * Rational(binom(M, hi.get_ui()) * ipow(Integer(b - 1), e.get_ui()));
}

std::size_t omega_bound_threshold(const Rational& eps) {
  require_eps(eps);
  return ceil((1 - eps) / (eps * (1 - 2 * eps))).get_ui();
}

Interval binary_entropy(const Rational& x, unsigned long bits) {
  if (x < 0 || x > 1) throw DomainError("binary entropy needs x in [0,1]");
  if (x == 0 || x == 1) return Interval::point(Rational(0));
  const unsigned long w = bits + 8;
  Interval a = scale(-x, ln_enclosure(x, w));
  Interval b = scale(-(1 - x), ln_enclosure(Rational(1 - x), w));
  return add(a, b);
}

Interval power_enclosure(unsigned base, const Rational& x, unsigned long bits) {
  if (x.get_den() == 1) {
    long e = x.get_num().get_si();
    return Interval::point(pow_int(Rational(base), e));
  }
  return exp_enclosure(scale(x, ln_enclosure(Rational(base), bits + 32)), bits);
}

bool epsilon_valid(const Rational& s, unsigned b, const Rational& eps) {
  if (eps <= 0 || eps * 2 >= 1) return false;
  return entropy_exponent(eps, b, kBits).hi < half_s_ln_b(s, b, kBits).lo;
}

std::size_t entropy_bound_threshold(const Rational& eps, unsigned /*b*/) {
  require_eps(eps);
  Interval num = ln_enclosure(Rational((1 - eps) / (1 - 2 * eps)), kBits);
  Interval g = binary_entropy(eps, kBits);
  return std::max<std::size_t>(1, ceil(num.hi / g.lo).get_ui());
}

EpsilonChoice epsilon_for_s(const Rational& s, unsigned b, unsigned max_halvings) {
  if (s <= 0) throw DomainError("s must be positive");
  if (b < 2) throw DomainError("base must be at least 2");
  Rational eps(1, 4);
  for (unsigned i = 0; i <= max_halvings; ++i, eps /= 2) {
    Interval lhs = entropy_exponent(eps, b, kBits);
    Interval rhs = half_s_ln_b(s, b, kBits);
    if (lhs.hi < rhs.lo) return {eps, rhs.lo - lhs.hi, entropy_bound_threshold(eps, b)};
  }
  throw BudgetExhausted("no certified epsilon after " + std::to_string(max_halvings) + " halvings");
}

CoverBoundReport cover_cost(unsigned b, const Rational& s, const Rational& eps, std::size_t K, std::size_t M_cap) {
  if (b < 2) throw DomainError("base must be at least 2");
  if (s <= 0) throw DomainError("s must be positive");
  if (K < 1) throw DomainError("K must be at least 1");
  require_eps(eps);
  CoverBoundReport r;
  r.base = b;
  r.s = s;
  r.epsilon = eps;
  r.K = K;
  r.epsilon_valid = epsilon_valid(s, b, eps);
  if (!r.epsilon_valid) throw ConstraintError("epsilon " + to_string(eps) + " fails the entropy condition");
  r.m0 = entropy_bound_threshold(eps, b);
  r.M_cap = std::max({M_cap, K - 1, r.m0 - 1});

  const Interval two_s = power_enclosure(2, s, kBits);
  Rational sum(0);
  for (std::size_t M = K; M <= r.M_cap; ++M) {
    CoverRow row;
    row.M = M;
    row.count = count_omega(b, M, eps);
    Interval c = mul(mul(two_s, Interval::point(Rational(row.count))),
                     power_enclosure(b, -s * Rational(static_cast<unsigned long>(M)), kBits));
    row.cost = c.hi;
    sum += row.cost;
    r.rows.push_back(std::move(row));
  }
  // sum_{M > cap} 2^s b^(-sM/2) = 2^s b^(-s(cap+1)/2) / (1 - b^(-s/2))
  Interval q = power_enclosure(b, -s / 2, kBits);
  Interval denom(1 - q.hi, 1 - q.lo);
  auto geometric = [&](std::size_t start) {
    Interval head = mul(two_s, power_enclosure(b, -s * Rational(static_cast<unsigned long>(start)) / 2, kBits));
    return mul(head, Interval(1 / denom.hi, 1 / denom.lo));
  };
  r.tail = geometric(r.M_cap + 1).hi;
  r.total = sum + r.tail;
  r.formula = geometric(K);
  return r;
}

}  // namespace zeroheavy
