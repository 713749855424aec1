#pragma once

#include "stringycalc/poly.hpp"
#include "stringycalc/rational_fn.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stringycalc {

/// One component of the exceptional locus together with its coefficient
/// in the discrepancy divisor.
struct Divisor {
    std::string name;
    Rational discrepancy; // a_j, must stay > -1
};

/// Data attached to an open stratum D_J^0: its Euler number and,
/// optionally, its E-polynomial restricted to the diagonal u = v, as a
/// polynomial in w = uv.
struct Stratum {
    BigInt euler;
    std::optional<Poly> epoly;
};

/// Subset of divisor indices, sorted ascending, no repeats.
using SubsetKey = std::vector<int>;

/// A normal-crossing divisor arrangement with per-stratum topological
/// input. Subsets absent from `strata` are treated as empty strata
/// (Euler number 0). The empty key denotes the open part away from all
/// divisors.
struct Stratification {
    std::vector<Divisor> divisors;
    std::map<SubsetKey, Stratum> strata;
};

struct ValidationReport {
    /// Subsets with no stratum entry (enumerated for up to 16 divisors).
    std::vector<SubsetKey> missing_subsets;
    /// Every discrepancy is a non-negative integer, so the E-function
    /// factors (w-1)/(w^(a+1)-1) are ratios of polynomials.
    bool symbolic_eligible = false;
    bool all_epolys_present = false;
};

/// Checks the arrangement invariants. Throws NotLogTerminal when some
/// discrepancy is <= -1, BadSubsetKey on malformed subset keys and
/// InconsistentEpoly when a stratum's epoly(1) differs from its Euler
/// number.
ValidationReport validate(const Stratification& s);

/// sum_J e(D_J^0) * prod_{j in J} 1/(a_j + 1), exactly.
Rational stringy_euler(const Stratification& s);

/// sum_J E(D_J^0; w) * prod_{j in J} (w-1)/(w^(a_j+1)-1) as a reduced
/// rational function of w. Needs integer discrepancies >= 0
/// (SymbolicPathUnavailable) and an epoly on every present stratum
/// (MissingEpoly).
RationalFn stringy_E_diagonal(const Stratification& s);

} // namespace stringycalc
