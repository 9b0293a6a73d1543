#include "zeroheavy/rational.hpp"

#include <cctype>

#include "zeroheavy/errors.hpp"

namespace zeroheavy {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  if (exponent < 0 && base == 0) throw DomainError("negative power of zero");
  Integer n = ipow(base.get_num(), e);
  Integer d = ipow(base.get_den(), e);
  return exponent < 0 ? make_rational(d, n) : make_rational(n, d);
}

Rational inverse_power(unsigned long base, unsigned long exponent) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), base, exponent);
  return Rational(Integer(1), d);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal", 0);

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };

  std::string whole = read_digits(pos);
  Rational value;
  if (pos < s.size() && s[pos] == '/') {
    if (whole.empty()) throw ParseError("missing numerator", pos);
    ++pos;
    std::string den = read_digits(pos);
    if (den.empty()) throw ParseError("missing denominator", pos);
    if (pos != s.size()) throw ParseError("unexpected character in rational", pos);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal", pos);
    value = make_rational(Integer(whole), d);
  } else {
    std::string frac;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      frac = read_digits(pos);
    }
    if (whole.empty() && frac.empty()) throw ParseError("expected a number", pos);
    if (pos != s.size()) throw ParseError("unexpected character in number (floating-point forms are not accepted)", pos);
    Integer n(whole.empty() ? std::string("0") : whole);
    Integer scale = ipow(Integer(10), frac.size());
    if (!frac.empty()) n = n * scale + Integer(frac);
    value = make_rational(n, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_decimal(const Rational& q, unsigned places) {
  Rational a = abs(q);
  Integer scaled = floor(a * Rational(ipow(Integer(10), places)));
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return (q < 0 ? "-" : "") + out;
}

bool is_dyadic(const Rational& q) {
  const Integer& d = q.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw DomainError("interval with lo > hi");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo = a.lo > b.lo ? a.lo : b.lo;
  Rational hi = a.hi < b.hi ? a.hi : b.hi;
  if (hi < lo) return std::nullopt;
  return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

}  // namespace zeroheavy
