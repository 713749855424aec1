#include "stringycalc/rational_fn.hpp"

#include "stringycalc/errors.hpp"

#include <utility>

namespace stringycalc {

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num_, den_); // includes the gcd of the integer contents
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

Rational limit_at_one(const RationalFn& f) {
    Poly num = f.num();
    Poly den = f.den();
    const Poly w_minus_one(std::vector<BigInt>{-1, 1});
    while (num.eval(1).is_zero() && den.eval(1).is_zero()) {
        num = num.is_zero() ? num : divexact(num, w_minus_one);
        den = divexact(den, w_minus_one);
    }
    BigInt d = den.eval(1);
    if (d.is_zero()) throw PoleAtOne("denominator vanishes at w = 1");
    return make_rational(num.eval(1), d);
}

} // namespace stringycalc
