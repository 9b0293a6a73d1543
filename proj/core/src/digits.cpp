#include "zeroheavy/digits.hpp"

#include <sstream>

#include "zeroheavy/errors.hpp"

namespace zeroheavy {
namespace {

void require_base(unsigned base) {
  if (base < 2) throw DomainError("base must be at least 2");
}

void require_unit(const Rational& q) {
  if (q < 0 || q >= 1) throw DomainError("value " + to_string(q) + " outside [0,1)");
}

constexpr char kDigitChars[] = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

DigitPrefix expand(const Rational& q, unsigned base, std::size_t M) {
  require_base(base);
  require_unit(q);
  DigitPrefix out;
  out.base = base;
  out.digits.reserve(M);
  Integer rem = q.get_num();
  const Integer& den = q.get_den();
  Integer digit;
  for (std::size_t i = 0; i < M; ++i) {
    if (rem == 0) {
      out.digits.push_back(0);
      continue;
    }
    rem *= base;
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    out.digits.push_back(static_cast<std::uint32_t>(digit.get_ui()));
  }
  out.exact = rem == 0;
  return out;
}

Rational reassemble(const DigitPrefix& prefix) {
  Integer n = 0;
  for (auto d : prefix.digits) n = n * prefix.base + d;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), prefix.base, prefix.digits.size());
  return make_rational(n, den);
}

Rational lambda_freq(const DigitPrefix& prefix, std::uint32_t d, std::size_t M) {
  if (M == 0) throw DomainError("lambda_freq needs M >= 1");
  if (M > prefix.size()) throw DomainError("lambda_freq: M exceeds available digits");
  if (d >= prefix.base) throw DomainError("digit outside base");
  std::size_t count = 0;
  for (std::size_t i = 0; i < M; ++i) count += prefix.digits[i] == d ? 1 : 0;
  return make_rational(Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(M)));
}

std::optional<FiniteExpansionNumber> FiniteExpansionNumber::try_from_rational(const Rational& q, unsigned base) {
  require_base(base);
  require_unit(q);
  Integer rem = q.get_num();
  const Integer& den = q.get_den();
  // Terminates iff every prime factor of den divides base.
  Integer d = den, g;
  Integer b(base);
  while (true) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), b.get_mpz_t());
    if (g == 1) break;
    d /= g;
  }
  if (d != 1) return std::nullopt;
  std::size_t length = 0;
  while (rem != 0) {
    rem *= base;
    rem %= den;
    ++length;
  }
  return FiniteExpansionNumber(q, base, length);
}

FiniteExpansionNumber FiniteExpansionNumber::from_rational(const Rational& q, unsigned base) {
  auto x = try_from_rational(q, base);
  if (!x) throw DomainError(to_string(q) + " has no terminating expansion in base " + std::to_string(base));
  return *x;
}

TPrimeNumber::TPrimeNumber(FiniteExpansionNumber stem, std::size_t k) : stem_(std::move(stem)), k_(k) {
  const std::size_t t = stem_.length();
  if (k_ <= t * t + 1) {
    throw ConstraintError("T' exponent " + std::to_string(k_) + " must exceed tau(stem)^2 + 1 = " +
                          std::to_string(t * t + 1));
  }
}

Rational TPrimeNumber::value() const { return stem_.value() + inverse_power(stem_.base(), k_); }

std::size_t tau(const FiniteExpansionNumber& x) { return x.length(); }

TPrimeNumber make_tprime(const FiniteExpansionNumber& stem, std::size_t k) { return TPrimeNumber(stem, k); }

std::size_t tau_prime(const TPrimeNumber& y) { return y.k(); }

std::optional<TPrimeNumber> decompose_tprime(const Rational& q, unsigned base) {
  require_base(base);
  if (q <= 0 || q >= 1) return std::nullopt;
  auto whole = FiniteExpansionNumber::try_from_rational(q, base);
  if (!whole) return std::nullopt;
  const std::size_t K = whole->length();
  Integer scaled = q.get_num() * ipow(Integer(base), K) / q.get_den();
  Integer last = scaled % base;
  if (last != 1) return std::nullopt;
  auto stem = FiniteExpansionNumber::from_rational(q - inverse_power(base, K), base);
  const std::size_t L = stem.length();
  if (K <= L * L + 1) return std::nullopt;
  return TPrimeNumber(stem, K);
}

ZeroRunCertificate zero_run_certificate(const DigitPrefix& prefix, const std::vector<std::size_t>& checkpoints) {
  ZeroRunCertificate cert;
  cert.base = prefix.base;
  for (std::size_t L : checkpoints) {
    if (L == 0 || L > prefix.size()) {
      throw DomainError("checkpoint " + std::to_string(L) + " outside prefix of length " +
                        std::to_string(prefix.size()));
    }
    cert.checkpoints.push_back({L, lambda_freq(prefix, 0, L)});
  }
  return cert;
}

bool certificate_meets_schedule(const ZeroRunCertificate& cert) {
  for (std::size_t i = 0; i < cert.checkpoints.size(); ++i) {
    Rational bound = Rational(1) - Rational(1, static_cast<unsigned long>(i + 1));
    if (cert.checkpoints[i].frequency < bound) return false;
  }
  return true;
}

bool validate_certificate(const ZeroRunCertificate& cert, const DigitPrefix& prefix) {
  if (cert.base != prefix.base) return false;
  for (const auto& cp : cert.checkpoints) {
    if (cp.length == 0 || cp.length > prefix.size()) return false;
    if (lambda_freq(prefix, 0, cp.length) != cp.frequency) return false;
  }
  return certificate_meets_schedule(cert);
}

DigitPrefix common_prefix(const Interval& range, unsigned base, std::size_t max_digits) {
  require_unit(range.lo);
  require_unit(range.hi);
  DigitPrefix lo = expand(range.lo, base, max_digits);
  if (range.is_point()) return lo;
  DigitPrefix hi = expand(range.hi, base, max_digits);
  std::size_t n = 0;
  while (n < max_digits && lo.digits[n] == hi.digits[n]) ++n;
  lo.digits.resize(n);
  lo.exact = false;
  return lo;
}

std::optional<Interval> fractional_magnitude(const Interval& range) {
  Interval mag;
  if (range.lo >= 0) {
    mag = range;
  } else if (range.hi <= 0) {
    mag = Interval(-range.hi, -range.lo);
  } else {
    mag = Interval(Rational(0), -range.lo > range.hi ? Rational(-range.lo) : range.hi);
  }
  Integer n = floor(mag.lo);
  if (mag.hi >= Rational(n + 1)) return std::nullopt;
  return Interval(mag.lo - n, mag.hi - n);
}

std::string format_digit_file(const DigitPrefix& prefix) {
  std::ostringstream os;
  os << "base=" << prefix.base << " length=" << prefix.size() << " exact=" << (prefix.exact ? 1 : 0) << '\n';
  if (prefix.base <= 36) {
    for (auto d : prefix.digits) os << kDigitChars[d];
  } else {
    for (std::size_t i = 0; i < prefix.size(); ++i) os << (i ? " " : "") << prefix.digits[i];
  }
  os << '\n';
  return os.str();
}

DigitPrefix parse_digit_file(std::string_view text) {
  std::string s(text);
  std::istringstream is(s);
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty digit file");
  unsigned base = 0;
  std::size_t length = 0;
  int exact = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      try {
        if (key == "base") base = static_cast<unsigned>(std::stoul(val));
        else if (key == "length") length = std::stoul(val);
        else if (key == "exact") exact = std::stoi(val);
        else throw ParseError("unknown header key '" + key + "'");
      } catch (const std::logic_error&) {
        throw ParseError("malformed header value '" + tok + "'");
      }
    }
  }
  if (base < 2 || (exact != 0 && exact != 1)) throw ParseError("digit file header must carry base>=2 and exact=0|1");
  DigitPrefix out;
  out.base = base;
  out.exact = exact == 1;
  std::string body;
  std::getline(is, body);
  if (base <= 36) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '\r') continue;
      std::uint32_t d;
      if (c >= '0' && c <= '9') d = static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'z') d = static_cast<std::uint32_t>(c - 'a' + 10);
      else throw ParseError("invalid digit character", i);
      if (d >= base) throw ParseError("digit exceeds base", i);
      out.digits.push_back(d);
    }
  } else {
    std::istringstream bs(body);
    unsigned long d;
    while (bs >> d) {
      if (d >= base) throw ParseError("digit exceeds base");
      out.digits.push_back(static_cast<std::uint32_t>(d));
    }
    if (!bs.eof()) throw ParseError("malformed digit list");
  }
  if (out.size() != length) {
    throw ParseError("digit count " + std::to_string(out.size()) + " does not match header length " +
                     std::to_string(length));
  }
  return out;
}

}  // namespace zeroheavy
