#pragma once

#include "stringycalc/stratification.hpp"

#include <optional>
#include <span>
#include <vector>

namespace stringycalc {

/// Parameters of the moduli space M_{2n} of semistable rank-2 sheaves
/// with c_1 = 0, c_2 = 2n on a generically polarized K3 surface. Its
/// Kirwan resolution has three exceptional divisors D1, D2, D3.
struct ModelParams {
    long n; // n >= 2, so c = 2n >= 4
};

/// Euler number of the isotropic Grassmannian Gr^w(k, 2n): 2^k * C(n,k).
/// OutOfRange unless 0 <= k <= n.
BigInt isotropic_grassmannian_euler(long k, long n);

/// Euler number (e^2 - e)/2 of the off-diagonal symmetric square
/// (Y x Y - Y)/involution of a space with Euler number e.
BigInt sym2_offdiag_euler(const BigInt& e);

/// Discrepancy coefficients of D1, D2, D3 in the Kirwan resolution.
struct Discrepancies {
    Rational d1; // 6n - 7
    Rational d2; // 2n - 4
    Rational d3; // 4n - 6
};
Discrepancies discrepancies(const ModelParams& p);

/// Euler numbers of the seven open strata cut out by D1, D2, D3, all
/// multiples of a_n = e(X^[n]) except e(D2^0) which is quadratic in it.
struct StratumEulerTable {
    long n;
    BigInt a_n;
    BigInt d1;   // e(D1^0) = 0: the P^5-blowup fiber of D1 has zero virtual Euler
                 // number once the overlaps with D2 and D3 are carved out
    BigInt d2;   // (2n-3)(2n-2) * (a_n^2 - a_n)/2, fibers P^{2n-4} x P^{2n-3}
                 // over the off-diagonal symmetric square of X^[n]
    BigInt d3;   // 2^2 C(n,2) a_n, from the Gr^w(2,2n)-bundle over X^[n]
    BigInt d12;  // 3 * 2^3 C(n,3) a_n
    BigInt d23;  // 2 * 2^2 C(n,2) a_n
    BigInt d13;  // (2n-4) * 2^2 C(n,2) a_n
    BigInt d123; // 2(2n-4) * 2^2 C(n,2) a_n
    Discrepancies disc;
};
StratumEulerTable stratum_euler_table(const ModelParams& p, const BigInt& a_n);

/// Packages the model as a generic arrangement: divisors D1, D2, D3 with
/// their discrepancies, the seven exceptional strata and the open part
/// with Euler number e_stable = e(M^s_{2n}). No epolys are attached (the
/// Hodge data of X^[n] is not modelled), so only the numeric path runs.
Stratification to_stratification(const ModelParams& p, const StratumEulerTable& t,
                                 const BigInt& e_stable);

/// The stringy Euler number of M_{2n} minus the unknown integer
/// e(M^s_{2n}): (n-1)(a_n^2 - a_n) + 2n(n-1) a_n / (2n-3), exactly.
Rational known_part(const ModelParams& p, const BigInt& a_n);

/// Integrality report for one n. A symplectic desingularization would
/// force the stringy Euler number to be an integer, so a nonzero
/// fractional part rules it out.
struct ObstructionReport {
    long n;
    BigInt a_n;
    Rational value;           // n * a_n / (2n - 3)
    Rational fractional_part; // frac(value), in [0, 1)
    Rational known_part;      // stringy Euler number with e(M^s) = 0
    bool obstructed;          // (2n - 3) does not divide n * a_n
    /// a_{4n-3} + a_n/4, the physics prediction for e(M_{2n}); filled
    /// only when the comparison is requested.
    std::optional<Rational> vw_value;
    std::optional<bool> est_vw_differ; // known_part - vw_value not an integer
};

/// a_table must reach index n, and index 4n-3 when with_vw is set;
/// TableTooShort otherwise. OutOfRange for n < 2.
ObstructionReport obstruction_test(const ModelParams& p, std::span<const BigInt> a_table,
                                   bool with_vw);

/// Ascending n in [2, max_n] whose obstruction test fires. TableTooShort
/// when a_table does not reach index max_n.
std::vector<long> obstruction_list(long max_n, std::span<const BigInt> a_table);

/// Confirms that the eight-term stringy sum over the strata (with
/// e(M^s) = 0 and per-divisor weights 1/(6n-6), 1/(2n-3), 1/(4n-5))
/// collapses to the known_part closed form, exactly.
bool identity_check(const ModelParams& p, const BigInt& a_n);

} // namespace stringycalc
