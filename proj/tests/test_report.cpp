#include "qcross/report.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace qcross;
using doctest::Approx;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

const Scenario& lower_bound() {
    const Scenario* s = find_scenario("lower-bound-sc");
    REQUIRE(s != nullptr);
    return *s;
}

}  // namespace

TEST_CASE("make_row carries both precise and display forms") {
    const TableRow row = make_row(lower_bound(), SpeedupDegree{2.0},
                                  FixedSpeedup{1.0}, 1.0);
    CHECK(row.scenario == "lower-bound-sc");
    CHECK(row.degree == 2.0);
    CHECK(row.speedup == 1.0);
    CHECK(row.rate_factor == 1.0);
    CHECK(row.calls == Approx(515151.5151515152).epsilon(1e-12));
    CHECK(row.runtime.seconds() == Approx(8757.57575757576).epsilon(1e-12));
    CHECK(row.calls_display == "5.2×10^5");
    CHECK(row.runtime_display == "2.4 hours");
}

TEST_CASE("run_sweep walks the cross-product degree-major") {
    SweepSpec spec;
    spec.scenario = lower_bound();
    spec.degrees = {SpeedupDegree{2.0}, SpeedupDegree{3.0}, SpeedupDegree{4.0}};
    spec.parallelism = {FixedSpeedup{1.0}, FixedSpeedup{1e3},
                        FixedSpeedup{1e6}};
    spec.rate_factors = {1.0};
    const std::vector<TableRow> rows = run_sweep(spec);
    REQUIRE(rows.size() == 9);
    // First block is degree 2 over the three speedups.
    CHECK(rows[0].degree == 2.0);
    CHECK(rows[0].speedup == 1.0);
    CHECK(rows[1].degree == 2.0);
    CHECK(rows[1].speedup == 1e3);
    CHECK(rows[2].speedup == 1e6);
    CHECK(rows[3].degree == 3.0);
    CHECK(rows[8].degree == 4.0);
    CHECK(rows[8].speedup == 1e6);
    // Each cell equals a direct breakeven evaluation.
    const TableRow direct = make_row(lower_bound(), SpeedupDegree{3.0},
                                     FixedSpeedup{1e3}, 1.0);
    CHECK(rows[4].calls == direct.calls);
    CHECK(rows[4].runtime == direct.runtime);
}

TEST_CASE("run_sweep validates its lists") {
    SweepSpec spec;
    spec.scenario = lower_bound();
    spec.parallelism = {FixedSpeedup{1.0}};
    spec.rate_factors = {1.0};
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);

    spec.degrees = {SpeedupDegree{2.0}};
    spec.rate_factors.clear();
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);
}

TEST_CASE("run_sweep refuses oversized cross-products") {
    SweepSpec spec;
    spec.scenario = lower_bound();
    spec.degrees.assign(101, SpeedupDegree{2.0});
    spec.parallelism.assign(101, FixedSpeedup{1.0});
    spec.rate_factors.assign(101, 1.0);
    CHECK_THROWS_AS(run_sweep(spec), std::domain_error);
}

TEST_CASE("run_sweep identifies the failing cell") {
    SweepSpec spec;
    spec.scenario = lower_bound();
    spec.degrees = {SpeedupDegree{1.0000001}};
    spec.parallelism = {FixedSpeedup{1.0}};
    spec.rate_factors = {1.0};
    try {
        run_sweep(spec);
        FAIL("expected a throw");
    } catch (const std::domain_error& e) {
        const std::string message = e.what();
        CHECK(message.find("sweep cell") != std::string::npos);
        CHECK(message.find("degree=") != std::string::npos);
    }
}

TEST_CASE("preset tables have the published shape") {
    const std::vector<TableRow> one = preset_rows(PresetTable::table1);
    REQUIRE(one.size() == 18);
    // Scenario alternates fastest; R is pinned to 1.
    for (std::size_t i = 0; i < one.size(); i += 2) {
        CHECK(one[i].scenario == "lower-bound-sc");
        CHECK(one[i + 1].scenario == "sk-annealing-sc");
        CHECK(one[i].rate_factor == 1.0);
        CHECK(one[i].degree == one[i + 1].degree);
        CHECK(one[i].speedup == one[i + 1].speedup);
    }
    CHECK(one[0].degree == 2.0);
    CHECK(one[0].speedup == 1.0);
    CHECK(one[5].degree == 2.0);
    CHECK(one[5].speedup == 1e6);
    CHECK(one[17].degree == 4.0);
    CHECK(one[17].speedup == 1e6);

    const std::vector<TableRow> two = preset_rows(PresetTable::table2);
    REQUIRE(two.size() == 6);
    for (const TableRow& row : two) {
        CHECK(row.degree == 2.0);
        CHECK(row.speedup == 1e3);
    }
    CHECK(two[0].rate_factor == 10.0);
    CHECK(two[2].rate_factor == 100.0);
    CHECK(two[4].rate_factor == 1000.0);
}

TEST_CASE("preset cells match the published display values") {
    const std::vector<TableRow> one = preset_rows(PresetTable::table1);
    CHECK(one[0].calls_display == "5.2×10^5");
    CHECK(one[0].runtime_display == "2.4 hours");
    CHECK(one[1].calls_display == "6.3×10^7");
    CHECK(one[1].runtime_display == "320 days");
    // Cubic, S = 1: the annealing side drops to under an hour.
    CHECK(one[7].calls_display == "7.9×10^3");
    CHECK(one[7].runtime_display == "58 minutes");

    const std::vector<TableRow> two = preset_rows(PresetTable::table2);
    // R = 1000 wipes out most of the gap on the quadratic side.
    CHECK(two[4].calls_display == "5.2×10^5");
    CHECK(two[4].runtime_display == "8.8 seconds");
    CHECK(two[5].calls_display == "6.3×10^7");
    CHECK(two[5].runtime_display == "7.7 hours");
    CHECK(two[0].runtime_display == "1.0 day");
    CHECK(two[1].runtime_display == "8.8 years");
    CHECK(two[2].runtime_display == "15 minutes");
    CHECK(two[3].runtime_display == "32 days");
}

TEST_CASE("parse helpers accept exactly the documented names") {
    CHECK(parse_preset("table1") == PresetTable::table1);
    CHECK(parse_preset("table2") == PresetTable::table2);
    CHECK_THROWS_AS(parse_preset("table3"), std::domain_error);
    CHECK(parse_export_format("text") == ExportFormat::text);
    CHECK(parse_export_format("csv") == ExportFormat::csv);
    CHECK(parse_export_format("json-lines") == ExportFormat::json_lines);
    CHECK_THROWS_AS(parse_export_format("yaml"), std::domain_error);
}

TEST_CASE("csv export is exact and parseable") {
    const std::vector<TableRow> rows = preset_rows(PresetTable::table1);
    const std::string csv = export_rows(rows, ExportFormat::csv);
    const std::vector<std::string> lines = lines_of(csv);
    REQUIRE(lines.size() == 19);
    CHECK(lines[0] == "scenario,degree,S,R,M_star,T_star_seconds");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::vector<std::string> fields = split_csv(lines[i + 1]);
        REQUIRE(fields.size() == 6);
        CHECK(fields[0] == rows[i].scenario);
        // Full precision: parsing the text recovers the exact double.
        CHECK(std::strtod(fields[4].c_str(), nullptr) == rows[i].calls);
        CHECK(std::strtod(fields[5].c_str(), nullptr) ==
              rows[i].runtime.seconds());
    }
}

TEST_CASE("csv escapes awkward scenario names") {
    TableRow row = make_row(lower_bound(), SpeedupDegree{2.0},
                            FixedSpeedup{1.0}, 1.0);
    row.scenario = "weird, \"name\"";
    const std::string csv = export_rows(std::span(&row, 1), ExportFormat::csv);
    CHECK(lines_of(csv)[1].rfind("\"weird, \"\"name\"\"\",", 0) == 0);
}

TEST_CASE("json-lines export emits one faithful object per row") {
    const std::vector<TableRow> rows = preset_rows(PresetTable::table2);
    const std::string dump = export_rows(rows, ExportFormat::json_lines);
    const std::vector<std::string> lines = lines_of(dump);
    REQUIRE(lines.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const nlohmann::json object = nlohmann::json::parse(lines[i]);
        CHECK(object.at("scenario").get<std::string>() == rows[i].scenario);
        CHECK(object.at("degree").get<double>() == rows[i].degree);
        CHECK(object.at("S").get<double>() == rows[i].speedup);
        CHECK(object.at("R").get<double>() == rows[i].rate_factor);
        CHECK(object.at("M_star").get<double>() == rows[i].calls);
        CHECK(object.at("T_star_seconds").get<double>() ==
              rows[i].runtime.seconds());
    }
}

TEST_CASE("text export aligns columns and repeats deterministically") {
    const std::vector<TableRow> rows = preset_rows(PresetTable::table2);
    const std::string text = export_rows(rows, ExportFormat::text);
    CHECK(text == export_rows(preset_rows(PresetTable::table2),
                              ExportFormat::text));
    const std::vector<std::string> lines = lines_of(text);
    REQUIRE(lines.size() == rows.size() + 1);
    CHECK(lines[0].rfind("scenario", 0) == 0);
    CHECK(lines[0].find("M*") != std::string::npos);
    CHECK(lines[1].find("lower-bound-sc") != std::string::npos);
}

TEST_CASE("render_preset repeats byte-identically") {
    const std::string first = render_preset(PresetTable::table1);
    const std::string second = render_preset(PresetTable::table1);
    CHECK(first == second);
    const std::vector<std::string> lines = lines_of(first);
    REQUIRE(lines.size() == 10);  // header + 9 degree/S combinations
    CHECK(lines[0].rfind("degree", 0) == 0);
    CHECK(first.find("880 millennia") != std::string::npos);
    CHECK(first.find("5.2×10^5") != std::string::npos);

    const std::vector<std::string> two = lines_of(render_preset(PresetTable::table2));
    REQUIRE(two.size() == 4);  // header + 3 rate rows
}
