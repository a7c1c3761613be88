// Exact rationals, high-precision reals and the error types shared by every module.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdensity {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Input that cannot be parsed (CLI exit code 2).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the mathematical domain of an operation (exit code 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A required hypothesis is unmet, e.g. interior() without a Condition (A) certificate.
class HypothesisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Number of significant decimal digits used for Real arithmetic.
/// Initialised from GDENSITY_DIGITS (default 60, never below 50).
unsigned real_digits();
void set_real_digits(unsigned digits);

/// Makes sure the MPFR default precision is applied in the calling thread.
void ensure_real_precision();

Rational pow2(long exponent);  // 2^exponent, exponent may be negative
Rational pow4(long exponent);

/// "3", "-1/2", "0.125" and "1e-3" are accepted; floats are read exactly as decimals.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Real to_real(const Rational& q);
Rational abs(const Rational& q);

/// floor(log2(q)) for q > 0, computed exactly.
long floor_log2(const Rational& q);

}  // namespace gdensity
