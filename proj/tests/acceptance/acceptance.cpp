#include <mpfr.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zeroheavy/cantor.hpp"
#include "zeroheavy/digits.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/serialize.hpp"
#include "zeroheavy/zigzag.hpp"

using namespace zeroheavy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const Interval kSafe(Rational(1, 4), Rational(3, 4));
const Interval kOpenUnit(Rational(0), Rational(1));

// Independent evaluator for the criterion-1 functions, written directly against MPFR.
using MpfrFn = std::function<void(mpfr_t, const mpfr_t)>;
const std::vector<std::pair<std::string, MpfrFn>> kSingle = {
    {"x", [](mpfr_t r, const mpfr_t x) { mpfr_set(r, x, MPFR_RNDN); }},
    {"2*x+1/3",
     [](mpfr_t r, const mpfr_t x) {
       mpfr_t t;
       mpfr_init2(t, mpfr_get_prec(r));
       mpfr_set_ui(t, 1, MPFR_RNDN);
       mpfr_div_ui(t, t, 3, MPFR_RNDN);
       mpfr_mul_ui(r, x, 2, MPFR_RNDN);
       mpfr_add(r, r, t, MPFR_RNDN);
       mpfr_clear(t);
     }},
    {"x^2", [](mpfr_t r, const mpfr_t x) { mpfr_sqr(r, x, MPFR_RNDN); }},
    {"exp(x)", [](mpfr_t r, const mpfr_t x) { mpfr_exp(r, x, MPFR_RNDN); }},
};

std::string serialize_run(const ConstructionResult& r) {
  std::string out;
  for (const auto& p : r.x_prefixes) out += format_digit_file(p);
  for (const auto& c : r.certificates) out += c.label + "\n" + format_digit_file(c.prefix);
  out += certificates_json(r);
  out += transcript_jsonl(r.transcript);
  return out;
}

bool checkpoints_meet_schedule(const CertifiedPrefix& c) {
  if (c.certificate.checkpoints.empty()) return false;
  for (std::size_t m = 1; m <= c.certificate.checkpoints.size(); ++m) {
    const Checkpoint& cp = c.certificate.checkpoints[m - 1];
    if (cp.length == 0 || cp.length > c.prefix.size()) return false;
    Rational lam = lambda_freq(c.prefix, 0, cp.length);
    if (lam != cp.frequency) return false;
    if (lam < Rational(1) - Rational(1, static_cast<unsigned long>(m))) return false;
  }
  return true;
}

std::vector<ConstructionResult> criterion1() {
  std::vector<ConstructionResult> runs;
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [text, fn] : kSingle) {
    auto t0 = Clock::now();
    ConstructionResult r = run_single(parse(text), kSafe, 10, 200, 256, {});
    double dt = seconds_since(t0);
    bool good = r.status == RunStatus::Complete && dt < 60 && r.certificates.size() == 2;
    for (const auto& c : r.certificates) good = good && checkpoints_meet_schedule(c) && c.prefix.size() >= 200;
    ok = ok && good;
    detail << text << (good ? " ok" : " bad") << " (" << dt << " s, x " << r.x_prefix().size() << " digits); ";
    runs.push_back(std::move(r));
  }
  report(1, ok, detail.str());
  return runs;
}

void criterion2(const std::vector<ConstructionResult>& runs) {
  std::size_t checked = 0, violations = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (const auto& e : runs[i].transcript) {
      if (e.tau_prime == 0) continue;
      // doubled precision relative to the digits needed to resolve b^-(tau'+1)
      mpfr_prec_t prec = static_cast<mpfr_prec_t>(2 * (4 * (e.tau_prime + 2) + 64));
      mpfr_t x, fx, y, d, bound, err;
      mpfr_inits2(prec, x, fx, y, d, bound, err, static_cast<mpfr_ptr>(nullptr));
      mpfr_set_q(x, e.x.get_mpq_t(), MPFR_RNDN);
      kSingle[i].second(fx, x);
      mpfr_set_q(y, e.y.get_mpq_t(), MPFR_RNDN);
      mpfr_sub(d, y, fx, MPFR_RNDN);
      mpfr_abs(d, d, MPFR_RNDN);
      mpfr_set_ui(bound, 10, MPFR_RNDN);
      mpfr_pow_si(bound, bound, -static_cast<long>(e.tau_prime + 1), MPFR_RNDN);
      // generous allowance for the MPFR rounding of x, y and phi(x)
      mpfr_set_ui_2exp(err, 1, -(prec - 16), MPFR_RNDN);
      mpfr_add(d, d, err, MPFR_RNDU);
      ++checked;
      if (mpfr_cmp(d, bound) >= 0) ++violations;
      mpfr_clears(x, fx, y, d, bound, err, static_cast<mpfr_ptr>(nullptr));
    }
  }
  report(2, checked > 0 && violations == 0,
         std::to_string(checked) + " recorded steps re-evaluated, " + std::to_string(violations) + " violations");
}

ConstructionResult family_run() {
  std::vector<FunctionSpec> fs;
  for (const char* q : {"1", "2", "3", "1/2", "5"}) fs.push_back(parse(std::string("exp((") + q + ")*x)"));
  return run_family(fs, kOpenUnit, 10, 60, {});
}

ConstructionResult criterion3() {
  auto t0 = Clock::now();
  ConstructionResult r = family_run();
  std::size_t valid = 0;
  for (const auto& c : r.certificates) valid += c.valid && validate_certificate(c.certificate, c.prefix);
  bool steps_ok = true;
  for (std::size_t i = 1; i < r.transcript.size(); ++i) {
    Rational step = abs(r.transcript[i].x - r.transcript[i - 1].x);
    steps_ok = steps_ok && step < inverse_power(2, r.transcript[i - 1].m + 2);
  }
  std::map<std::size_t, std::size_t> visits;
  for (const auto& e : r.transcript) ++visits[e.k];
  bool fair = true;
  std::ostringstream v;
  for (std::size_t k = 1; k <= 5; ++k) {
    fair = fair && visits[k] >= 3;
    v << visits[k] << (k < 5 ? "," : "");
  }
  bool ok = r.status == RunStatus::Complete && r.iterations == 60 && valid == 5 && steps_ok && fair;
  std::ostringstream d;
  d << "status " << to_string(r.status) << " after " << r.iterations << "/60 steps";
  if (!r.message.empty()) d << " [" << r.message << "]";
  d << "; valid image certificates " << valid << "/5; step bound " << (steps_ok ? "held" : "violated")
    << "; visits per k " << v.str() << "; " << seconds_since(t0) << " s";
  report(3, ok, d.str());
  return r;
}

void criterion4() {
  auto t0 = Clock::now();
  ConstructionResult r = run_family_multibase({parse("x")}, kOpenUnit, {2, 3}, 40, {});
  std::size_t valid = 0;
  for (const auto& c : r.certificates) valid += c.valid && validate_certificate(c.certificate, c.prefix);
  bool common = r.certificates.size() == 2;
  // identity: each base's image prefix must be the expansion of the one common x
  for (const auto& c : r.certificates) {
    DigitPrefix p = common_prefix(r.x_interval, c.base, c.prefix.size());
    common = common && p.digits.size() >= c.prefix.size() &&
             std::equal(c.prefix.digits.begin(), c.prefix.digits.end(), p.digits.begin());
  }
  bool ok = r.status == RunStatus::Complete && r.iterations == 40 && valid == 2 && common;
  std::ostringstream d;
  d << "status " << to_string(r.status) << " after " << r.iterations << "/40 steps";
  if (!r.message.empty()) d << " [" << r.message << "]";
  d << "; valid base certificates " << valid << "/2; common x " << (common ? "yes" : "no") << "; "
    << seconds_since(t0) << " s";
  report(4, ok, d.str());
}

void criterion5() {
  auto t0 = Clock::now();
  const std::size_t n = 10;
  TernaryWord w(n, 0);
  Rational prev_c(-1);
  Integer denom = ipow(3, n);
  std::size_t words = 0, mono_bad = 0, sym_bad = 0, dyadic_bad = 0;
  Integer idx = 0;
  for (;;) {
    Rational x = make_rational(idx, denom);
    Rational c = cantor_C(TernaryDigits::word(w)).approximant;
    if (c < prev_c) ++mono_bad;
    if (cantor_C(Rational(1) - x).approximant != Rational(1) - c) ++sym_bad;
    bool has_one = std::find(w.begin(), w.end(), 1) != w.end();
    if (has_one && !is_dyadic(c)) ++dyadic_bad;
    prev_c = c;
    ++words;
    std::size_t i = n;
    while (i > 0 && w[i - 1] == 2) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
    ++idx;
  }
  double dt = seconds_since(t0);
  bool ok = words == 59049 && mono_bad == 0 && sym_bad == 0 && dyadic_bad == 0 && dt < 30;
  std::ostringstream d;
  d << words << " words; monotonicity " << mono_bad << ", symmetry " << sym_bad << ", dyadic " << dyadic_bad
    << " failures; " << dt << " s";
  report(5, ok, d.str());
}

void criterion6() {
  auto t0 = Clock::now();
  bool endpoints = true;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const Rational& x : {Rational(0), Rational(1)}) {
      BinaryValue v = c_hat(x, k);
      endpoints = endpoints && v.exact() && v.approximant == 0;
    }
  }
  std::size_t grid_bad = 0;
  for (unsigned i = 0; i <= 10000; ++i) {
    Rational x = make_rational(Integer(i), Integer(10000u));
    if (c_hat(x, 1).approximant != cantor_Cs(x).approximant) ++grid_bad;
  }
  std::mt19937_64 rng(20241016);
  std::size_t nest_checked = 0, nest_bad = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    std::size_t sampled = 0;
    while (sampled < 1000) {
      TernaryWord prefix(rng() % 12), cycle(1 + rng() % 8);
      for (auto& d : prefix) d = static_cast<std::uint8_t>(rng() % 3);
      for (auto& d : cycle) d = static_cast<std::uint8_t>(rng() % 3);
      TernaryDigits x = (rng() % 4 == 0) ? TernaryDigits::word(prefix) : TernaryDigits::periodic(prefix, cycle);
      auto ones = x.finite_ones();
      if (ones && *ones < k + 1) continue;
      ++sampled;
      ++nest_checked;
      Rational a = c_hat(x, k).approximant, b = c_hat(x, k + 1).approximant;
      if (abs(b - a) > inverse_power(2, k * k)) ++nest_bad;
    }
  }
  std::size_t wit_ok = 0;
  const std::size_t m = 6;
  for (int i = 0; i < 10; ++i) {
    TernaryWord prefix(rng() % 10), cycle(1 + rng() % 6);
    for (auto& d : prefix) d = static_cast<std::uint8_t>(rng() % 3);
    for (auto& d : cycle) d = static_cast<std::uint8_t>(rng() % 3);
    cycle[rng() % cycle.size()] = 1;  // infinitely many ones
    TernaryDigits x = TernaryDigits::periodic(prefix, cycle);
    ZeroHeavinessWitness w = zero_heaviness_witness(x, m);
    std::size_t L = w.certificate.checkpoints.empty() ? 0 : w.certificate.checkpoints.back().length;
    // independent expansion: a deeper approximant whose enclosure fixes the first L binary digits
    DigitPrefix independent;
    for (std::size_t k = m + 1; k <= m + 8; ++k) {
      independent = common_prefix(c_hat(x, k).enclosure, 2, L);
      if (independent.size() >= L) break;
    }
    if (L > 0 && independent.size() >= L && validate_certificate(w.certificate, independent) &&
        w.certificate.checkpoints.size() == m)
      ++wit_ok;
  }
  bool ok = endpoints && grid_bad == 0 && nest_bad == 0 && wit_ok == 10;
  std::ostringstream d;
  d << "endpoints " << (endpoints ? "0" : "wrong") << "; level-1 grid mismatches " << grid_bad << "/10001; nesting "
    << nest_bad << "/" << nest_checked << " violations; witnesses " << wit_ok << "/10 validated; "
    << seconds_since(t0) << " s";
  report(6, ok, d.str());
}

// number of zero digits needed: z * den >= (den - num) * M
bool heavy(std::size_t zeros, std::size_t M, const Rational& eps) {
  Integer lhs = Integer(static_cast<unsigned long>(zeros)) * eps.get_den();
  Integer rhs = (eps.get_den() - eps.get_num()) * Integer(static_cast<unsigned long>(M));
  return lhs >= rhs;
}

std::uint64_t brute_odometer(unsigned b, std::size_t M, const Rational& eps) {
  std::vector<unsigned> w(M, 0);
  std::uint64_t count = 0;
  std::size_t zeros = M;
  for (;;) {
    if (heavy(zeros, M, eps)) ++count;
    std::size_t i = M;
    while (i > 0 && w[i - 1] == b - 1) {
      w[--i] = 0;
      ++zeros;
    }
    if (i == 0) break;
    if (w[i - 1] == 0) --zeros;
    ++w[i - 1];
  }
  return count;
}

// every zero/non-zero position mask, weighted by (b-1)^(non-zero positions)
Integer brute_masks(unsigned b, std::size_t M, const Rational& eps) {
  Integer count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << M); ++mask) {
    std::size_t nonzero = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (heavy(M - nonzero, M, eps)) count += ipow(b - 1, nonzero);
  }
  return count;
}

void criterion7() {
  auto t0 = Clock::now();
  const std::vector<Rational> eps = {Rational(1, 8), Rational(1, 4), Rational(1, 3)};
  const std::uint64_t limit = std::uint64_t{1} << 20;
  std::size_t pairs = 0, literal = 0, mismatches = 0, bound_bad = 0, bound_checked = 0;
  for (const Rational& e : eps) {
    for (std::size_t M = 1; M <= 20; ++M) {
      for (unsigned b = 2;; ++b) {
        Integer size = ipow(b, M);
        if (size > limit) break;
        Integer fast = count_omega(b, M, e);
        Integer brute = b <= 10 ? Integer(static_cast<unsigned long>(brute_odometer(b, M, e))) : brute_masks(b, M, e);
        if (b <= 10) ++literal;
        ++pairs;
        if (fast != brute) ++mismatches;
      }
    }
    std::size_t m0 = omega_bound_threshold(e);
    for (unsigned b : {2u, 3u, 5u, 10u, 16u}) {
      for (std::size_t M = m0; M <= m0 + 200; ++M) {
        ++bound_checked;
        if (omega_upper_bound(b, M, e) < Rational(count_omega(b, M, e))) ++bound_bad;
      }
    }
  }
  std::ostringstream d;
  d << pairs << " (b,M,eps) cases (" << literal << " by literal enumeration), " << mismatches << " mismatches; bound "
    << bound_bad << "/" << bound_checked << " violations past M0; " << seconds_since(t0) << " s";
  report(7, mismatches == 0 && bound_bad == 0, d.str());
}

void criterion8() {
  Rational eps = epsilon_for_s(Rational(1), 2).epsilon;
  std::vector<CoverBoundReport> reps;
  for (std::size_t K : {40u, 60u, 80u}) reps.push_back(cover_cost(2, Rational(1), eps, K, 2 * K));
  bool under = true;
  for (const auto& r : reps) under = under && r.epsilon_valid && r.total <= r.formula.lo;
  bool mono = reps[1].total < reps[0].total && reps[2].total < reps[1].total;
  std::ostringstream d;
  d << "eps " << to_string(eps) << "; totals";
  for (const auto& r : reps) d << " K=" << r.K << ":" << mpq_get_d(r.total.get_mpq_t());
  d << "; below formula " << (under ? "yes" : "no");
  report(8, under && mono && reps[2].total < reps[0].total, d.str());
}

void criterion9(const std::vector<ConstructionResult>& single, const ConstructionResult& fam) {
  bool same = true;
  for (std::size_t i = 0; i < kSingle.size(); ++i) {
    ConstructionResult again = run_single(parse(kSingle[i].first), kSafe, 10, 200, 256, {});
    same = same && serialize_run(again) == serialize_run(single[i]);
  }
  bool fam_same = serialize_run(family_run()) == serialize_run(fam);
  report(9, same && fam_same,
         std::string("single runs ") + (same ? "identical" : "differ") + ", family run " +
             (fam_same ? "identical" : "differs"));
}

}  // namespace

int main() {
  auto single = criterion1();
  criterion2(single);
  ConstructionResult fam = criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(single, fam);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
