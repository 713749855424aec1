#include "stringycalc/ogrady.hpp"

#include "stringycalc/errors.hpp"

#include <string>

namespace stringycalc {

namespace {

void require_n(long n) {
    if (n < 2) throw OutOfRange("model needs n >= 2, got " + std::to_string(n));
}

} // namespace

BigInt isotropic_grassmannian_euler(long k, long n) {
    if (k < 0 || k > n)
        throw OutOfRange("isotropic Grassmannian needs 0 <= k <= n, got k = " +
                         std::to_string(k) + ", n = " + std::to_string(n));
    return (BigInt(1) << static_cast<unsigned>(k)) * binomial(n, k);
}

BigInt sym2_offdiag_euler(const BigInt& e) { return (e * e - e) / 2; }

Discrepancies discrepancies(const ModelParams& p) {
    require_n(p.n);
    return {Rational(6 * p.n - 7), Rational(2 * p.n - 4), Rational(4 * p.n - 6)};
}

StratumEulerTable stratum_euler_table(const ModelParams& p, const BigInt& a_n) {
    require_n(p.n);
    const long n = p.n;
    const BigInt c2 = binomial(n, 2); // zero kills nothing here since n >= 2
    const BigInt c3 = binomial(n, 3); // zero for n = 2, emptying D1 cap D2

    StratumEulerTable t;
    t.n = n;
    t.a_n = a_n;
    t.d1 = 0;
    t.d2 = BigInt(2 * n - 3) * (2 * n - 2) * sym2_offdiag_euler(a_n);
    t.d3 = 4 * c2 * a_n;
    t.d12 = 24 * c3 * a_n;
    t.d23 = 8 * c2 * a_n;
    t.d13 = (2 * n - 4) * 4 * c2 * a_n;
    t.d123 = 2 * (2 * n - 4) * 4 * c2 * a_n;
    t.disc = discrepancies(p);
    return t;
}

Stratification to_stratification(const ModelParams& p, const StratumEulerTable& t,
                                 const BigInt& e_stable) {
    require_n(p.n);
    Stratification s;
    s.divisors = {{"D1", t.disc.d1}, {"D2", t.disc.d2}, {"D3", t.disc.d3}};
    s.strata[{}] = {e_stable, std::nullopt};
    s.strata[{0}] = {t.d1, std::nullopt};
    s.strata[{1}] = {t.d2, std::nullopt};
    s.strata[{2}] = {t.d3, std::nullopt};
    s.strata[{0, 1}] = {t.d12, std::nullopt};
    s.strata[{1, 2}] = {t.d23, std::nullopt};
    s.strata[{0, 2}] = {t.d13, std::nullopt};
    s.strata[{0, 1, 2}] = {t.d123, std::nullopt};
    return s;
}

Rational known_part(const ModelParams& p, const BigInt& a_n) {
    require_n(p.n);
    const long n = p.n;
    return Rational(BigInt(n - 1) * (a_n * a_n - a_n)) +
           make_rational(BigInt(2 * n) * (n - 1) * a_n, 2 * n - 3);
}

ObstructionReport obstruction_test(const ModelParams& p, std::span<const BigInt> a_table,
                                   bool with_vw) {
    require_n(p.n);
    const long n = p.n;
    if (static_cast<std::size_t>(n) >= a_table.size())
        throw TableTooShort("a-table reaches index " + std::to_string(a_table.size() - 1) +
                            ", need " + std::to_string(n));

    ObstructionReport r;
    r.n = n;
    r.a_n = a_table[static_cast<std::size_t>(n)];
    r.value = make_rational(n * r.a_n, 2 * n - 3);
    r.fractional_part = fractional_part(r.value);
    r.known_part = known_part(p, r.a_n);
    r.obstructed = !r.fractional_part.is_zero();

    if (with_vw) {
        const long vw_index = 4 * n - 3;
        if (static_cast<std::size_t>(vw_index) >= a_table.size())
            throw TableTooShort("a-table reaches index " + std::to_string(a_table.size() - 1) +
                                ", the Vafa-Witten value needs " + std::to_string(vw_index));
        r.vw_value = Rational(a_table[static_cast<std::size_t>(vw_index)]) +
                     make_rational(r.a_n, 4);
        r.est_vw_differ = !is_integer(r.known_part - *r.vw_value);
    }
    return r;
}

std::vector<long> obstruction_list(long max_n, std::span<const BigInt> a_table) {
    std::vector<long> out;
    if (max_n < 2) return out;
    if (static_cast<std::size_t>(max_n) >= a_table.size())
        throw TableTooShort("a-table reaches index " + std::to_string(a_table.size() - 1) +
                            ", need " + std::to_string(max_n));
    for (long n = 2; n <= max_n; ++n)
        if (obstruction_test({n}, a_table, false).obstructed) out.push_back(n);
    return out;
}

bool identity_check(const ModelParams& p, const BigInt& a_n) {
    require_n(p.n);
    const long n = p.n;
    const StratumEulerTable t = stratum_euler_table(p, a_n);
    const Rational w1 = make_rational(1, 6 * n - 6);
    const Rational w2 = make_rational(1, 2 * n - 3);
    const Rational w3 = make_rational(1, 4 * n - 5);

    Rational sum = Rational(t.d1) * w1 + Rational(t.d2) * w2 + Rational(t.d3) * w3 +
                   Rational(t.d12) * w1 * w2 + Rational(t.d23) * w2 * w3 +
                   Rational(t.d13) * w1 * w3 + Rational(t.d123) * w1 * w2 * w3;
    return sum == known_part(p, a_n);
}

} // namespace stringycalc
