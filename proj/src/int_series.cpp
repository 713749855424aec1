#include "stringycalc/int_series.hpp"

#include "stringycalc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace stringycalc {

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw OutOfRange("series needs at least the constant coefficient");
}

IntSeries IntSeries::constant(const BigInt& value, std::size_t order) {
    IntSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

IntSeries IntSeries::monomial(const BigInt& coeff, std::size_t degree, std::size_t order) {
    IntSeries s(order);
    if (degree <= order) s.coeffs_[degree] = coeff;
    return s;
}

IntSeries IntSeries::truncated(std::size_t new_order) const {
    std::size_t n = std::min(new_order, order());
    IntSeries s(n);
    for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = coeffs_[i];
    return s;
}

IntSeries series_add(const IntSeries& a, const IntSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    IntSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

IntSeries series_sub(const IntSeries& a, const IntSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    IntSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> r(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; j + i <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return IntSeries(std::move(r));
}

IntSeries series_inverse(const IntSeries& a) {
    const BigInt& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("series inverse needs constant term +1 or -1, got " + a0.str());

    std::size_t n = a.order();
    // The recurrence b_k = -1/a0 * sum_{i>=1} a_i b_{k-i} only visits the
    // nonzero a_i, which keeps sparse factors like (1 - q^m)^e cheap.
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i <= n; ++i)
        if (!a.coeff(i).is_zero()) support.push_back(i);

    std::vector<BigInt> b(n + 1);
    b[0] = a0; // 1/a0 == a0 for a unit constant term
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (std::size_t i : support) {
            if (i > k) break;
            acc += a.coeff(i) * b[k - i];
        }
        if (!acc.is_zero()) b[k] = -a0 * acc;
    }
    return IntSeries(std::move(b));
}

IntSeries series_pow(const IntSeries& a, unsigned long exponent) {
    IntSeries result = IntSeries::one(a.order());
    IntSeries base = a;
    while (exponent > 0) {
        if (exponent & 1UL) result = series_mul(result, base);
        exponent >>= 1UL;
        if (exponent > 0) base = series_mul(base, base);
    }
    return result;
}

IntSeries expand_product_family(const std::map<unsigned long, long long>& exponents,
                                std::size_t order) {
    IntSeries acc = IntSeries::one(order);
    for (const auto& [m, e] : exponents) {
        if (m == 0) throw OutOfRange("product family exponent map needs positive m");
        if (m > order || e == 0) continue;
        IntSeries factor = series_sub(IntSeries::one(order), IntSeries::monomial(1, m, order));
        IntSeries p = series_pow(factor, static_cast<unsigned long>(std::llabs(e)));
        if (e < 0) p = series_inverse(p);
        acc = series_mul(p, acc); // sparse operand first
    }
    return acc;
}

std::vector<BigInt> hilbert_euler_table(std::size_t max_n) {
    std::map<unsigned long, long long> exponents;
    for (unsigned long m = 1; m <= max_n; ++m) exponents[m] = -24;
    IntSeries s = expand_product_family(exponents, max_n);
    return {s.coeffs().begin(), s.coeffs().end()};
}

} // namespace stringycalc
