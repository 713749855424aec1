#include "stringycalc/stratification.hpp"

#include "stringycalc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace stringycalc {

namespace {

std::string subset_string(const SubsetKey& key) {
    std::string s = "{";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key[i]);
    }
    return s + "}";
}

long small_nonneg_int(const Rational& a) {
    // Discrepancy exponents a_j + 1 become polynomial degrees; anything
    // that does not fit a long is far past every sane input.
    if (numerator(a) > std::numeric_limits<long>::max() / 2)
        throw OutOfRange("discrepancy too large for the symbolic path");
    return static_cast<long>(numerator(a));
}

} // namespace

ValidationReport validate(const Stratification& s) {
    const int r = static_cast<int>(s.divisors.size());

    for (const Divisor& d : s.divisors)
        if (d.discrepancy <= -1)
            throw NotLogTerminal("divisor " + d.name + " has discrepancy " +
                                 to_plain_string(d.discrepancy) + " <= -1");

    for (const auto& [key, stratum] : s.strata) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 0 || key[i] >= r)
                throw BadSubsetKey("subset " + subset_string(key) + " references divisor index " +
                                   std::to_string(key[i]) + " of " + std::to_string(r));
            if (i > 0 && key[i] <= key[i - 1])
                throw BadSubsetKey("subset " + subset_string(key) + " is not strictly ascending");
        }
        if (stratum.epoly && stratum.epoly->eval(1) != stratum.euler)
            throw InconsistentEpoly("stratum " + subset_string(key) + ": epoly(1) = " +
                                    stratum.epoly->eval(1).str() + " but euler = " +
                                    stratum.euler.str());
    }

    ValidationReport report;
    report.symbolic_eligible =
        std::all_of(s.divisors.begin(), s.divisors.end(), [](const Divisor& d) {
            return is_integer(d.discrepancy) && d.discrepancy >= 0;
        });
    report.all_epolys_present =
        std::all_of(s.strata.begin(), s.strata.end(),
                    [](const auto& kv) { return kv.second.epoly.has_value(); });
    if (r <= 16) {
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            SubsetKey key;
            for (int j = 0; j < r; ++j)
                if (mask & (1u << j)) key.push_back(j);
            if (!s.strata.contains(key)) report.missing_subsets.push_back(std::move(key));
        }
    }
    return report;
}

Rational stringy_euler(const Stratification& s) {
    validate(s);
    Rational total = 0;
    for (const auto& [key, stratum] : s.strata) {
        Rational term(stratum.euler);
        for (int j : key)
            term /= s.divisors[static_cast<std::size_t>(j)].discrepancy + 1;
        total += term;
    }
    return total;
}

RationalFn stringy_E_diagonal(const Stratification& s) {
    ValidationReport report = validate(s);
    if (!report.symbolic_eligible)
        throw SymbolicPathUnavailable(
            "symbolic E-function needs non-negative integer discrepancies");
    if (!report.all_epolys_present)
        throw MissingEpoly("every present stratum needs an epoly for the symbolic path");

    const Poly w_minus_one(std::vector<BigInt>{-1, 1});
    RationalFn total;
    for (const auto& [key, stratum] : s.strata) {
        RationalFn term(*stratum.epoly);
        for (int j : key) {
            long a = small_nonneg_int(s.divisors[static_cast<std::size_t>(j)].discrepancy);
            term = term * RationalFn(w_minus_one,
                                     Poly::power_minus_one(static_cast<std::size_t>(a) + 1));
        }
        total = total + term;
    }
    return total;
}

} // namespace stringycalc
