#include "stringycalc/poly.hpp"

#include "stringycalc/errors.hpp"

#include <algorithm>
#include <utility>

namespace stringycalc {

namespace {

const BigInt kZero = 0;

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, computed by
/// k-th step r <- lc(b)*r - r_k*w^(k-db)*b. Requires deg a >= deg b >= 0.
Poly pseudo_remainder(const Poly& a, const Poly& b) {
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    const BigInt& lb = b.leading();
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        BigInt top = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lb;
        if (!top.is_zero()) {
            for (int i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(k - db + i)] -= top * b.coeff(static_cast<std::size_t>(i));
        }
    }
    trim(r);
    return Poly(std::move(r));
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    BigInt c = p.content();
    if (p.leading() < 0) c = -c;
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (const BigInt& x : p.coeffs()) out.push_back(x / c);
    return Poly(std::move(out));
}

} // namespace

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::power_minus_one(std::size_t m) {
    std::vector<BigInt> v(m + 1);
    v[0] = -1;
    v[m] = 1;
    return Poly(std::move(v));
}

const BigInt& Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt Poly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt Poly::content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::operator-() const {
    std::vector<BigInt> v;
    v.reserve(coeffs_.size());
    for (const BigInt& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const BigInt& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    std::vector<BigInt> v;
    v.reserve(p.coeffs_.size());
    for (const BigInt& x : p.coeffs_) v.push_back(c * x);
    return Poly(std::move(v));
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw Error("inexact polynomial division");
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const BigInt& lb = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        BigInt& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        if (top % lb != 0) throw Error("inexact polynomial division");
        BigInt f = top / lb;
        int shift = k - b.degree();
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(shift + i)] -= f * b.coeff(static_cast<std::size_t>(i));
        q[static_cast<std::size_t>(shift)] = std::move(f);
    }
    for (const BigInt& c : rem)
        if (!c.is_zero()) throw Error("inexact polynomial division");
    return Poly(std::move(q));
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;

    BigInt c = boost::multiprecision::gcd(a.content(), b.content());
    Poly u = primitive_part(a);
    Poly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = primitive_part(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return c * u;
}

} // namespace stringycalc
