#include "stringycalc/stratification_json.hpp"

#include "stringycalc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace stringycalc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& required, const std::set<std::string>& optional) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!required.contains(key) && !optional.contains(key))
            fail(where, "unknown key '" + key + "'");
    }
    for (const auto& key : required)
        if (!obj.contains(key)) fail(where, "missing key '" + key + "'");
}

BigInt integer_field(const json& v, const std::string& where) {
    if (v.is_string()) return parse_bigint(v.get<std::string>());
    if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    fail(where, "expected a decimal string or integer");
}

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    fail(where, "expected a \"p/q\" string or integer");
}

} // namespace

Stratification parse_stratification(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    require_keys(doc, "stratification", {"divisors", "strata"}, {});

    Stratification s;
    std::map<std::string, int> index_of;
    if (!doc["divisors"].is_array()) fail("divisors", "expected an array");
    for (const auto& d : doc["divisors"]) {
        require_keys(d, "divisor", {"name", "discrepancy"}, {});
        if (!d["name"].is_string() || d["name"].get<std::string>().empty())
            fail("divisor", "name must be a non-empty string");
        std::string name = d["name"].get<std::string>();
        if (index_of.contains(name)) fail("divisor", "duplicate name '" + name + "'");
        index_of[name] = static_cast<int>(s.divisors.size());
        s.divisors.push_back({std::move(name), rational_field(d["discrepancy"], "discrepancy")});
    }

    if (!doc["strata"].is_array()) fail("strata", "expected an array");
    for (const auto& item : doc["strata"]) {
        require_keys(item, "stratum", {"subset", "euler"}, {"epoly"});
        if (!item["subset"].is_array()) fail("stratum", "subset must be an array of names");
        SubsetKey key;
        for (const auto& name : item["subset"]) {
            if (!name.is_string()) throw BadSubsetKey("subset entries must be divisor names");
            auto it = index_of.find(name.get<std::string>());
            if (it == index_of.end())
                throw BadSubsetKey("subset references unknown divisor '" +
                                   name.get<std::string>() + "'");
            key.push_back(it->second);
        }
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw BadSubsetKey("subset lists a divisor twice");

        Stratum stratum;
        stratum.euler = integer_field(item["euler"], "euler");
        if (item.contains("epoly")) {
            if (!item["epoly"].is_array()) fail("epoly", "expected a coefficient array");
            std::vector<BigInt> coeffs;
            for (const auto& c : item["epoly"]) coeffs.push_back(integer_field(c, "epoly"));
            stratum.epoly = Poly(std::move(coeffs));
        }
        if (!s.strata.emplace(std::move(key), std::move(stratum)).second)
            throw BadSubsetKey("subset appears more than once");
    }
    return s;
}

Stratification load_stratification(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stratification(buf.str());
}

std::string stratification_to_json(const Stratification& s) {
    using ojson = nlohmann::ordered_json;
    ojson doc;
    doc["divisors"] = ojson::array();
    for (const Divisor& d : s.divisors)
        doc["divisors"].push_back(
            {{"name", d.name}, {"discrepancy", to_fraction_string(d.discrepancy)}});
    doc["strata"] = ojson::array();
    for (const auto& [key, stratum] : s.strata) {
        std::vector<std::string> names;
        for (int j : key) names.push_back(s.divisors[static_cast<std::size_t>(j)].name);
        std::sort(names.begin(), names.end());
        ojson entry{{"subset", names}, {"euler", stratum.euler.str()}};
        if (stratum.epoly) {
            auto coeffs = ojson::array();
            for (const BigInt& c : stratum.epoly->coeffs()) coeffs.push_back(c.str());
            entry["epoly"] = coeffs;
        }
        doc["strata"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

} // namespace stringycalc
