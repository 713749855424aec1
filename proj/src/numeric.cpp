#include "stringycalc/numeric.hpp"

#include "stringycalc/errors.hpp"

namespace stringycalc {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw Error("rational with zero denominator");
    // The two-argument cpp_rational constructor rejects negative
    // denominators; division normalizes sign and gcd in one go.
    return Rational(num) / Rational(den);
}

BigInt binomial(const BigInt& n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

BigInt floor_int(const Rational& r) {
    const BigInt& num = numerator(r);
    const BigInt& den = denominator(r);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

Rational fractional_part(const Rational& r) { return r - Rational(floor_int(r)); }

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_plain_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return to_fraction_string(r);
}

BigInt parse_bigint(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw SchemaError("empty integer string");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw SchemaError("bad integer string: '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(s));
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den.is_zero()) throw SchemaError("zero denominator in '" + std::string(s) + "'");
    return make_rational(num, den);
}

} // namespace stringycalc
