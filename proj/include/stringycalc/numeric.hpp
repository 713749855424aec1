#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace stringycalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// num/den as a normalized Rational. Throws Error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// C(n, k); zero when k < 0, k > n or n < 0.
BigInt binomial(const BigInt& n, long k);

bool is_integer(const Rational& r);

/// Largest integer <= r.
BigInt floor_int(const Rational& r);

/// r - floor(r), always in [0, 1).
Rational fractional_part(const Rational& r);

/// Canonical "p/q" form, the denominator always spelled out ("5/1").
std::string to_fraction_string(const Rational& r);

/// "p" for integers, "p/q" otherwise.
std::string to_plain_string(const Rational& r);

/// Strict decimal integer: optional '-', then digits. SchemaError otherwise.
BigInt parse_bigint(std::string_view s);

/// "p" or "p/q" with p, q strict decimal integers. SchemaError on garbage
/// or a zero denominator. A negative q is folded into the sign of p.
Rational parse_rational(std::string_view s);

} // namespace stringycalc
