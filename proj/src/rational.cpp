#include "gdensity/rational.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>

namespace gdensity {

namespace {

unsigned initial_digits() {
  if (const char* env = std::getenv("GDENSITY_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::max(50L, v));
  }
  return 60;
}

std::atomic<unsigned> g_digits{initial_digits()};
thread_local unsigned t_applied = 0;

}  // namespace

unsigned real_digits() { return g_digits.load(); }

void set_real_digits(unsigned digits) {
  g_digits.store(std::max(50u, digits));
  ensure_real_precision();
}

void ensure_real_precision() {
  const unsigned d = g_digits.load();
  if (t_applied != d) {
    Real::default_precision(d);
    t_applied = d;
  }
}

Rational pow2(long exponent) {
  Integer p = Integer(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational pow4(long exponent) { return pow2(2 * exponent); }

namespace {

// Decimal only: GMP would read a leading 0 as octal and 0x as hex.
Integer parse_decimal_integer(std::string d, const std::string& whole) {
  bool neg = false;
  if (!d.empty() && (d[0] == '-' || d[0] == '+')) {
    neg = d[0] == '-';
    d.erase(0, 1);
  }
  if (d.empty() || !std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad integer in '" + whole + "'");
  const auto nz = d.find_first_not_of('0');
  d = nz == std::string::npos ? "0" : d.substr(nz);
  Integer v(d);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty rational");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const Integer num = parse_decimal_integer(s.substr(0, slash), s);
      const Integer den = parse_decimal_integer(s.substr(slash + 1), s);
      if (den == 0) throw ParseError("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    // decimal with optional exponent, read exactly
    std::string mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      mant = s.substr(0, e);
      std::size_t used = 0;
      exp10 = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw ParseError("bad exponent in '" + s + "'");
      if (exp10 > 4096 || exp10 < -4096) throw ParseError("exponent out of range in '" + s + "'");
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant.erase(0, 1);
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
      if (c == '.') {
        if (seen_dot) throw ParseError("bad number '" + s + "'");
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_dot) ++frac;
      } else {
        throw ParseError("bad number '" + s + "'");
      }
    }
    if (digits.empty()) throw ParseError("bad number '" + s + "'");
    Rational q{parse_decimal_integer(digits, s)};
    const long shift = exp10 - frac;
    Integer ten = 1;
    for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) ten *= 10;
    q = shift < 0 ? q / Rational(ten) : q * Rational(ten);
    return neg ? Rational(-q) : q;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

Real to_real(const Rational& q) {
  ensure_real_precision();
  return Real(q);
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

long floor_log2(const Rational& q) {
  if (q <= 0) throw DomainError("floor_log2 of a non-positive rational");
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  long e = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
  // 2^e may overshoot q by one binade
  while (pow2(e) > q) --e;
  while (pow2(e + 1) <= q) ++e;
  return e;
}

}  // namespace gdensity
