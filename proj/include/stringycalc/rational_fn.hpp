#pragma once

#include "stringycalc/poly.hpp"

namespace stringycalc {

/// Quotient of two integer polynomials in w, kept in a canonical reduced
/// form: no common polynomial factor, no common integer content across
/// the pair, denominator leading coefficient positive.
class RationalFn {
public:
    RationalFn() : RationalFn(Poly(), Poly::constant(1)) {}
    explicit RationalFn(Poly p) : RationalFn(std::move(p), Poly::constant(1)) {}
    RationalFn(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn&, const RationalFn&) = default;

private:
    Poly num_;
    Poly den_;
};

/// Exact value of f at w = 1 after cancelling every common (w - 1)
/// factor by synthetic division; PoleAtOne if the denominator still
/// vanishes there.
Rational limit_at_one(const RationalFn& f);

} // namespace stringycalc
