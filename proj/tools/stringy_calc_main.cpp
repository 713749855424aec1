// stringy-calc: exact stringy invariants from normal-crossing resolution
// data, plus the built-in moduli model and its integrality obstruction
// reports. Every value printed is exact; no floating point anywhere.

#include "stringycalc/errors.hpp"
#include "stringycalc/int_series.hpp"
#include "stringycalc/ogrady.hpp"
#include "stringycalc/stratification.hpp"
#include "stringycalc/stratification_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace stringycalc;
using ojson = nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxOrder = 512;

enum class Format { plain, json, csv };

/// Command-line level mistakes: bad ranges, bad flag combinations.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw UsageError("unknown format '" + name + "'");
}

std::size_t max_order_cap() {
    const char* env = std::getenv("STRINGY_CALC_MAX_ORDER");
    if (env == nullptr) return kDefaultMaxOrder;
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("STRINGY_CALC_MAX_ORDER must be a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
}

void check_order(long order) {
    const std::size_t cap = max_order_cap();
    if (order < 0 || static_cast<std::size_t>(order) > cap)
        throw UsageError("series order " + std::to_string(order) + " exceeds the cap " +
                         std::to_string(cap) + " (see STRINGY_CALC_MAX_ORDER)");
}

/// Rationals keep the explicit "p/q" spelling in machine formats.
std::string fmt_rational(const Rational& r, Format f) {
    return f == Format::plain ? to_plain_string(r) : to_fraction_string(r);
}

std::string cell_string(const ojson& v, char array_sep) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += array_sep;
            out += cell_string(x, array_sep);
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_csv_line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << csv_escape(cells[i]);
    }
    std::cout << '\n';
}

/// Rows share one key set; plain output pads to column widths.
void emit_table(const ojson& rows, Format f) {
    if (f == Format::json) {
        std::cout << ojson{{"rows", rows}}.dump(2) << '\n';
        return;
    }
    std::vector<std::string> headers;
    if (!rows.empty())
        for (const auto& [key, value] : rows.front().items()) {
            (void)value;
            headers.push_back(key);
        }
    if (f == Format::csv) {
        emit_csv_line(headers);
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            for (const auto& h : headers) cells.push_back(cell_string(row.at(h), ' '));
            emit_csv_line(cells);
        }
        return;
    }
    std::vector<std::size_t> width;
    for (const auto& h : headers) width.push_back(h.size());
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < headers.size(); ++i) {
            cells.push_back(cell_string(row.at(headers[i]), ' '));
            width[i] = std::max(width[i], cells.back().size());
        }
        grid.push_back(std::move(cells));
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << cells[i];
            if (i + 1 < cells.size())
                std::cout << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        std::cout << '\n';
    };
    line(headers);
    for (const auto& cells : grid) line(cells);
}

void emit_report(const ojson& report, Format f) {
    if (f == Format::json) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    if (f == Format::csv) {
        emit_csv_line({"field", "value"});
        for (const auto& [key, value] : report.items())
            emit_csv_line({key, cell_string(value, ' ')});
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_array()) {
            std::cout << key << " = [";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << cell_string(value[i], ' ');
            }
            std::cout << "]\n";
        } else {
            std::cout << key << " = " << cell_string(value, ' ') << '\n';
        }
    }
}

ojson coeff_strings(const Poly& p) {
    auto arr = ojson::array();
    for (const BigInt& c : p.coeffs()) arr.push_back(c.str());
    if (arr.empty()) arr.push_back("0"); // zero polynomial still shows one coefficient
    return arr;
}

int run_hilb(long max_n, Format f) {
    if (max_n < 0) throw UsageError("hilb needs --max >= 0");
    check_order(max_n);
    const auto table = hilbert_euler_table(static_cast<std::size_t>(max_n));
    auto rows = ojson::array();
    for (std::size_t n = 0; n < table.size(); ++n)
        rows.push_back({{"n", n}, {"a_n", table[n].str()}});
    emit_table(rows, f);
    return 0;
}

int run_obstruction(long max_n, bool with_vw, Format f) {
    if (max_n < 2) throw UsageError("obstruction needs --max >= 2");
    const long order = with_vw ? 4 * max_n - 3 : max_n;
    check_order(order);
    const auto table = hilbert_euler_table(static_cast<std::size_t>(order));
    auto rows = ojson::array();
    for (long n = 2; n <= max_n; ++n) {
        const ObstructionReport r = obstruction_test({n}, table, with_vw);
        ojson row{{"n", n},
                  {"a_n", r.a_n.str()},
                  {"value", fmt_rational(r.value, f)},
                  {"fractional_part", fmt_rational(r.fractional_part, f)},
                  {"obstructed", r.obstructed}};
        if (with_vw) {
            row["vw_value"] = fmt_rational(*r.vw_value, f);
            row["est_vw_differ"] = *r.est_vw_differ;
        }
        rows.push_back(std::move(row));
    }
    emit_table(rows, f);
    return 0;
}

struct StringyOptions {
    std::string strata_path;
    std::string model;
    long n = 0;
    std::string e_stable; // decimal string, empty when not given
    bool symbolic = false;
    std::string format = "plain";
};

int run_stringy(const StringyOptions& opt) {
    const Format f = parse_format(opt.format);
    if (opt.strata_path.empty() == opt.model.empty())
        throw UsageError("pass exactly one of --strata FILE or --model ogrady");

    Stratification s;
    ojson report;
    bool stable_part_unknown = false;
    if (!opt.strata_path.empty()) {
        s = load_stratification(opt.strata_path);
    } else {
        if (opt.n < 2) throw UsageError("--model ogrady needs --n >= 2");
        check_order(opt.n);
        BigInt e_stable = 0;
        if (!opt.e_stable.empty()) {
            try {
                e_stable = parse_bigint(opt.e_stable);
            } catch (const SchemaError&) {
                throw UsageError("--e-stable must be a decimal integer, got '" + opt.e_stable +
                                 "'");
            }
        } else {
            stable_part_unknown = true;
        }
        const auto table = hilbert_euler_table(static_cast<std::size_t>(opt.n));
        const ModelParams params{opt.n};
        s = to_stratification(params, stratum_euler_table(params, table.back()), e_stable);
        report["n"] = opt.n;
        if (!stable_part_unknown) report["e_stable"] = e_stable.str();
    }

    const Rational est = stringy_euler(s);
    if (stable_part_unknown) {
        // e(M^s) is genuinely unknown; report the known part symbolically.
        report["known_part"] = fmt_rational(est, f);
        report["e_st"] = fmt_rational(est, f) + " + e(M^s)";
    } else {
        report["e_st"] = fmt_rational(est, f);
    }

    if (opt.symbolic) {
        const RationalFn fn = stringy_E_diagonal(s);
        const Rational lim = limit_at_one(fn);
        if (lim != est) throw Error("internal: limit of E_st(w) at 1 differs from e_st");
        report["est_num"] = coeff_strings(fn.num());
        report["est_den"] = coeff_strings(fn.den());
        report["limit"] = fmt_rational(lim, f);
    }
    emit_report(report, f);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stringy Euler numbers, stringy E-functions and "
                 "integrality obstruction reports"};
    app.require_subcommand(1);

    long hilb_max = 0;
    std::string hilb_format = "plain";
    auto* hilb = app.add_subcommand("hilb", "table of Hilbert scheme Euler numbers a_n");
    hilb->add_option("--max", hilb_max, "largest n in the table")->required();
    hilb->add_option("--format", hilb_format, "plain, json or csv");

    long obs_max = 0;
    bool obs_vw = false;
    std::string obs_format = "plain";
    auto* obs = app.add_subcommand(
        "obstruction", "integrality test n*a_n/(2n-3) ruling out symplectic desingularizations");
    obs->add_option("--max", obs_max, "largest n to test")->required();
    obs->add_flag("--vw", obs_vw, "also compare against the Vafa-Witten value a_{4n-3} + a_n/4");
    obs->add_option("--format", obs_format, "plain, json or csv");

    StringyOptions st;
    auto* stringy = app.add_subcommand(
        "stringy", "stringy Euler number (and optionally E-function) of an arrangement");
    auto* strata_opt = stringy->add_option("--strata", st.strata_path,
                                           "stratification JSON file")
                           ->check(CLI::ExistingFile);
    auto* model_opt =
        stringy->add_option("--model", st.model, "built-in model: ogrady")
            ->check(CLI::IsMember({"ogrady"}));
    strata_opt->excludes(model_opt);
    model_opt->excludes(strata_opt);
    stringy->add_option("--n", st.n, "model parameter n >= 2 (c_2 = 2n)")->needs(model_opt);
    stringy->add_option("--e-stable", st.e_stable, "Euler number of the stable locus")
        ->needs(model_opt);
    stringy->add_flag("--symbolic", st.symbolic, "also print E_st restricted to w = uv");
    stringy->add_option("--format", st.format, "plain, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (hilb->parsed()) return run_hilb(hilb_max, parse_format(hilb_format));
        if (obs->parsed()) return run_obstruction(obs_max, obs_vw, parse_format(obs_format));
        return run_stringy(st);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotLogTerminal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const BadSubsetKey& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const InconsistentEpoly& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const PoleAtOne& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const SymbolicPathUnavailable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const MissingEpoly& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
