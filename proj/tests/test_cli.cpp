// End-to-end checks of the stringy-calc binary: formats, exit codes and
// the CSV/JSON value agreement. Takes the binary path as argv[1].

#include "run_cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cli_driver::run;
using json = nlohmann::ordered_json; // field order must mirror the CSV columns

int g_failures = 0;

#define REQUIRE(cond, msg)                                                            \
    do {                                                                              \
        if (!(cond)) {                                                                \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " << msg      \
                      << "\n";                                                        \
            ++g_failures;                                                             \
        }                                                                             \
    } while (0)

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    // Good enough for this tool's output: no embedded commas or quotes.
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.size() && line.back() == ',') cells.push_back("");
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string value_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += ' ';
            out += value_string(x);
        }
        return out;
    }
    return v.dump();
}

/// Table commands: every CSV cell must equal the JSON field, in order.
void check_csv_matches_json(const std::string& binary, const std::string& args) {
    auto js = run(binary, args + " --format json");
    auto cs = run(binary, args + " --format csv");
    REQUIRE(js.exit_code == 0 && cs.exit_code == 0, "both formats succeed for " << args);
    json rows = json::parse(js.out).at("rows");
    auto csv = parse_csv(cs.out);
    REQUIRE(csv.size() == rows.size() + 1, "csv row count for " << args);
    const auto& header = csv[0];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(header.size() == rows[i].size(), "csv column count for " << args);
        std::size_t col = 0;
        for (const auto& [key, value] : rows[i].items()) {
            REQUIRE(header[col] == key, "csv header order for " << args);
            REQUIRE(csv[i + 1][col] == value_string(value),
                    "csv/json value mismatch at row " << i << " col " << key << " for " << args);
            ++col;
        }
    }
}

void check_report_csv_matches_json(const std::string& binary, const std::string& args) {
    auto js = run(binary, args + " --format json");
    auto cs = run(binary, args + " --format csv");
    REQUIRE(js.exit_code == 0 && cs.exit_code == 0, "both formats succeed for " << args);
    json report = json::parse(js.out);
    auto csv = parse_csv(cs.out);
    REQUIRE(csv.size() == report.size() + 1, "csv field count for " << args);
    std::size_t row = 1;
    for (const auto& [key, value] : report.items()) {
        REQUIRE(csv[row][0] == key, "csv field name for " << args);
        REQUIRE(csv[row][1] == value_string(value), "csv field value for " << key);
        ++row;
    }
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-stringy-calc>\n";
        return 2;
    }
    const std::string bin = argv[1];

    // ---- hilb ----
    {
        auto r = run(bin, "hilb --max 2");
        REQUIRE(r.exit_code == 0, "hilb exit code");
        REQUIRE(r.out == "n  a_n\n0  1\n1  24\n2  324\n", "hilb plain table, got:\n" << r.out);

        auto r0 = run(bin, "hilb --max 0 --format json");
        json rows0 = json::parse(r0.out).at("rows");
        REQUIRE(rows0.size() == 1 && rows0[0]["n"] == 0 && rows0[0]["a_n"] == "1",
                "hilb --max 0 single row");

        auto bad = run(bin, "hilb --max -1");
        REQUIRE(bad.exit_code == 2, "hilb --max -1 exits 2");
        REQUIRE(bad.out.empty(), "usage errors keep stdout clean");

        auto big = run(bin, "hilb --max 17 --format json");
        json rows = json::parse(big.out).at("rows");
        REQUIRE(rows[17]["a_n"] == "6599620022400", "a_17 as decimal string");

        check_csv_matches_json(bin, "hilb --max 8");
    }

    // ---- obstruction ----
    {
        auto r = run(bin, "obstruction --max 20 --format json");
        REQUIRE(r.exit_code == 0, "obstruction exit code");
        json rows = json::parse(r.out).at("rows");
        REQUIRE(rows.size() == 19, "one row per n in [2,20]");
        std::set<long> obstructed;
        for (const auto& row : rows)
            if (row.at("obstructed").get<bool>()) obstructed.insert(row.at("n").get<long>());
        const std::set<long> expected{5, 6, 8, 11, 12, 13, 15, 16, 17, 18, 19, 20};
        REQUIRE(obstructed == expected, "obstructed set for n <= 20");

        auto single = run(bin, "obstruction --max 2 --format json");
        json srows = json::parse(single.out).at("rows");
        REQUIRE(srows.size() == 1 && srows[0]["obstructed"] == false,
                "n = 2 is the resolved case");

        auto vw = run(bin, "obstruction --max 5 --vw --format json");
        json vrows = json::parse(vw.out).at("rows");
        const auto& n5 = vrows.back();
        REQUIRE(n5.at("n") == 5 && n5.at("est_vw_differ") == true, "n = 5 differs from VW");
        REQUIRE(n5.at("vw_value") == "6599620066464/1", "VW value a_17 + a_5/4");
        REQUIRE(n5.at("fractional_part") == "1/7", "n = 5 fractional part");

        auto low = run(bin, "obstruction --max 1");
        REQUIRE(low.exit_code == 2, "obstruction --max 1 exits 2");

        check_csv_matches_json(bin, "obstruction --max 12 --vw");
    }

    // ---- stringy, file input ----
    {
        auto smooth = write_temp("stringy_cli_smooth.json",
                                 R"({"divisors": [], "strata": [{"subset": [], "euler": "7"}]})");
        auto r = run(bin, "stringy --strata " + smooth.string());
        REQUIRE(r.exit_code == 0 && r.out == "e_st = 7\n", "smooth space plain report");

        auto rj = run(bin, "stringy --strata " + smooth.string() + " --format json");
        json report = json::parse(rj.out);
        REQUIRE(report.at("e_st") == "7/1", "canonical rational in json");
        // round-trip: the report re-parses and re-serializes identically
        REQUIRE(json::parse(json::parse(rj.out).dump()) == report, "json round-trip");

        auto onediv = write_temp("stringy_cli_onediv.json", R"({
            "divisors": [{"name": "D1", "discrepancy": "1/1"}],
            "strata": [{"subset": [], "euler": "1", "epoly": ["0","1"]},
                       {"subset": ["D1"], "euler": "1", "epoly": ["1"]}]})");
        auto sym = run(bin, "stringy --strata " + onediv.string() + " --symbolic --format json");
        json sreport = json::parse(sym.out);
        REQUIRE(sreport.at("e_st") == "3/2", "one-divisor stringy Euler number");
        REQUIRE(sreport.at("est_num") == json::array({"1", "1", "1"}), "reduced numerator");
        REQUIRE(sreport.at("est_den") == json::array({"1", "1"}), "reduced denominator");
        REQUIRE(sreport.at("limit") == "3/2", "limit agrees with e_st");

        check_report_csv_matches_json(bin, "stringy --strata " + onediv.string() + " --symbolic");

        auto notlt = write_temp("stringy_cli_notlt.json", R"({
            "divisors": [{"name": "D1", "discrepancy": "-1/1"}],
            "strata": [{"subset": [], "euler": "1"}]})");
        auto r3 = run(bin, "stringy --strata " + notlt.string());
        REQUIRE(r3.exit_code == 3 && r3.out.empty(), "log-terminal violation exits 3");

        auto garbage = write_temp("stringy_cli_garbage.json", "{oops");
        REQUIRE(run(bin, "stringy --strata " + garbage.string()).exit_code == 4,
                "parse error exits 4");

        auto halfdisc = write_temp("stringy_cli_half.json", R"({
            "divisors": [{"name": "D1", "discrepancy": "1/2"}],
            "strata": [{"subset": [], "euler": "1", "epoly": ["1"]},
                       {"subset": ["D1"], "euler": "1", "epoly": ["1"]}]})");
        REQUIRE(run(bin, "stringy --strata " + halfdisc.string()).exit_code == 0,
                "fractional discrepancy fine numerically");
        REQUIRE(run(bin, "stringy --strata " + halfdisc.string() + " --symbolic").exit_code == 5,
                "fractional discrepancy blocks --symbolic with exit 5");
    }

    // ---- stringy, model input ----
    {
        auto r = run(bin, "stringy --model ogrady --n 5 --e-stable 0 --format json");
        json report = json::parse(r.out);
        REQUIRE(report.at("e_st") == "869855086080/7", "model n = 5 known part");

        auto pending = run(bin, "stringy --model ogrady --n 5");
        REQUIRE(pending.out.find("e_st = 869855086080/7 + e(M^s)") != std::string::npos,
                "unknown stable part stays symbolic, got:\n" << pending.out);

        auto shifted = run(bin, "stringy --model ogrady --n 3 --e-stable 10 --format json");
        REQUIRE(json::parse(shifted.out).at("e_st") == "20486410/1",
                "e_stable enters with coefficient one");

        REQUIRE(run(bin, "stringy --model ogrady --n 5 --symbolic").exit_code == 5,
                "model has no epolys, --symbolic exits 5");
        REQUIRE(run(bin, "stringy --model ogrady --n 1").exit_code == 2, "model needs n >= 2");
        REQUIRE(run(bin, "stringy --model ogrady").exit_code == 2, "model needs --n");
        REQUIRE(run(bin, "stringy --n 4").exit_code == 2, "--n without --model is rejected");
        REQUIRE(run(bin, "stringy --model ogrady --n 4 --e-stable 1.5").exit_code == 2,
                "--e-stable wants an integer");
        REQUIRE(run(bin, "stringy").exit_code == 2, "stringy needs a source");
        check_report_csv_matches_json(bin, "stringy --model ogrady --n 4");
    }

    // ---- global behavior ----
    {
        REQUIRE(run(bin, "").exit_code == 2, "missing subcommand exits 2");
        REQUIRE(run(bin, "frobnicate").exit_code == 2, "unknown subcommand exits 2");
        REQUIRE(run(bin, "--help").exit_code == 0, "--help exits 0");

        auto capped = run(bin, "hilb --max 50", "/dev/null", "STRINGY_CALC_MAX_ORDER=10 ");
        REQUIRE(capped.exit_code == 2, "order cap from the environment");
        REQUIRE(run(bin, "hilb --max 10", "/dev/null", "STRINGY_CALC_MAX_ORDER=10 ").exit_code ==
                    0,
                "cap boundary still allowed");
        REQUIRE(run(bin, "hilb --max 2", "/dev/null", "STRINGY_CALC_MAX_ORDER=bogus ")
                        .exit_code == 2,
                "unparseable cap is rejected");
        REQUIRE(run(bin, "obstruction --max 5 --vw", "/dev/null",
                    "STRINGY_CALC_MAX_ORDER=16 ")
                        .exit_code == 2,
                "--vw needs the table up to 4N-3, past the cap");

        // diagnostics go to stderr, reports to stdout
        auto errfile = std::filesystem::temp_directory_path() / "stringy_cli_err.txt";
        auto r = run(bin, "obstruction --max 1", errfile.string());
        REQUIRE(r.out.empty(), "stdout stays clean on errors");
        std::ifstream err(errfile);
        std::stringstream buf;
        buf << err.rdbuf();
        REQUIRE(buf.str().find("error") != std::string::npos, "stderr carries the diagnostic");
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failure(s)\n";
    return 1;
}
