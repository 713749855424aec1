#pragma once

#include "stringycalc/stratification.hpp"

#include <filesystem>
#include <string>

namespace stringycalc {

/// Parses the stratification interchange format:
///
///   {
///     "divisors": [ {"name": "D1", "discrepancy": "13/1"}, ... ],
///     "strata":   [ {"subset": ["D1","D2"], "euler": "1296",
///                    "epoly": ["1","0","3"]}, ... ]
///   }
///
/// Rationals are "p/q" strings, big integers decimal strings (plain JSON
/// integers are also accepted on input), epoly coefficients are listed
/// lowest degree first and the field is optional. The empty subset []
/// is the open part away from all divisors. Unknown keys, duplicate
/// divisor names and malformed numbers raise SchemaError; bad subsets
/// raise BadSubsetKey.
Stratification parse_stratification(const std::string& json_text);

/// parse_stratification over a file's contents; SchemaError when the
/// file cannot be read.
Stratification load_stratification(const std::filesystem::path& path);

/// Canonical serialization: divisors in order, strata in key order,
/// subsets as name lists sorted lexicographically, every integer a
/// decimal string and every rational a "p/q" string.
std::string stratification_to_json(const Stratification& s);

} // namespace stringycalc
