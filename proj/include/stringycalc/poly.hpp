#pragma once

#include "stringycalc/numeric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace stringycalc {

/// Univariate polynomial in w over arbitrary-precision integers,
/// coefficients stored lowest degree first with no trailing zeros.
class Poly {
public:
    Poly() = default; // zero polynomial
    explicit Poly(std::vector<BigInt> coeffs);

    static Poly constant(const BigInt& c);
    static Poly monomial(const BigInt& c, std::size_t degree);
    /// w^m - 1.
    static Poly power_minus_one(std::size_t m);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const { return coeffs_.back(); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    BigInt eval(const BigInt& x) const;
    /// gcd of all coefficients, non-negative; zero for the zero polynomial.
    BigInt content() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const BigInt& c, const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Exact quotient a / b over the integers; Error when b is zero or the
/// division leaves a remainder.
Poly divexact(const Poly& a, const Poly& b);

/// Polynomial gcd over the integers (primitive-PRS Euclid together with
/// the gcd of the contents), normalized to a positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

} // namespace stringycalc
