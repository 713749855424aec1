#pragma once

#include "stringycalc/numeric.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace stringycalc {

/// Formal power series in q over arbitrary-precision integers, known
/// modulo q^(order+1). coeff(i) is the coefficient of q^i; there are
/// exactly order+1 stored coefficients.
class IntSeries {
public:
    /// The zero series truncated at the given order.
    explicit IntSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes ownership of a non-empty coefficient vector; order = size - 1.
    explicit IntSeries(std::vector<BigInt> coeffs);

    static IntSeries constant(const BigInt& value, std::size_t order);
    static IntSeries one(std::size_t order) { return constant(1, order); }
    static IntSeries monomial(const BigInt& coeff, std::size_t degree, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigInt& coeff(std::size_t i) const { return coeffs_[i]; }
    void set_coeff(std::size_t i, BigInt value) { coeffs_[i] = std::move(value); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Copy truncated to min(new_order, order()).
    IntSeries truncated(std::size_t new_order) const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Sum / difference truncated to the lower operand order.
IntSeries series_add(const IntSeries& a, const IntSeries& b);
IntSeries series_sub(const IntSeries& a, const IntSeries& b);

/// Cauchy product truncated to min(a.order(), b.order()).
IntSeries series_mul(const IntSeries& a, const IntSeries& b);

/// Multiplicative inverse to a's order. The constant term must be +1 or
/// -1 so that the inverse stays integral; otherwise NonUnitConstantTerm.
IntSeries series_inverse(const IntSeries& a);

/// a^exponent by binary exponentiation; exponent 0 gives 1.
IntSeries series_pow(const IntSeries& a, unsigned long exponent);

/// Expands prod_m (1 - q^m)^{e_m} to the given order. Factors with
/// m > order cannot contribute and are skipped; negative exponents are
/// computed as the inverse of the positive power. OutOfRange on m == 0.
IntSeries expand_product_family(const std::map<unsigned long, long long>& exponents,
                                std::size_t order);

/// Coefficients a_0..a_max_n of prod_{m>=1} (1 - q^m)^{-24}: the Euler
/// numbers of the Hilbert schemes of points on a K3 surface.
std::vector<BigInt> hilbert_euler_table(std::size_t max_n);

} // namespace stringycalc
