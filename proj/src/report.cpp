#include "qcross/report.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "qcross/decimal.hpp"
#include "qcross/format.hpp"

namespace qcross {

namespace {

SpeedupQuery make_query(const Scenario& scenario, SpeedupDegree degree,
                        const ParallelismConfig& parallelism,
                        double rate_factor) {
    SpeedupQuery query;
    query.t_q = resolve_quantum_cost(scenario.quantum);
    query.t_c = resolve_classical_cost(scenario.classical);
    query.degree = degree;
    query.parallelism = parallelism;
    query.rate_factor = rate_factor;
    return query;
}

std::size_t display_width(std::string_view text) {
    // Column width in code points; every non-ASCII glyph used here is one
    // column wide.
    std::size_t width = 0;
    for (unsigned char c : text) {
        if (c < 0x80 || c >= 0xC0) {
            ++width;
        }
    }
    return width;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> widths;
    for (const auto& line : grid) {
        widths.resize(std::max(widths.size(), line.size()), 0);
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], display_width(line[i]));
        }
    }
    std::string out;
    for (const auto& line : grid) {
        std::string rendered;
        for (std::size_t i = 0; i < line.size(); ++i) {
            rendered += line[i];
            if (i + 1 < line.size()) {
                rendered.append(widths[i] - display_width(line[i]) + 2, ' ');
            }
        }
        while (!rendered.empty() && rendered.back() == ' ') {
            rendered.pop_back();
        }
        out += rendered;
        out.push_back('\n');
    }
    return out;
}

const Scenario& must_find(std::string_view name) {
    const Scenario* scenario = find_scenario(name);
    if (scenario == nullptr) {
        throw std::logic_error("missing built-in scenario");
    }
    return *scenario;
}

constexpr double kPresetDegrees[] = {2.0, 3.0, 4.0};
constexpr double kPresetSpeedups[] = {1.0, 1e3, 1e6};
constexpr double kPresetRates[] = {10.0, 100.0, 1000.0};

}  // namespace

TableRow make_row(const Scenario& scenario, SpeedupDegree degree,
                  const ParallelismConfig& parallelism, double rate_factor) {
    const SpeedupQuery query =
        make_query(scenario, degree, parallelism, rate_factor);
    const BreakevenPoint point = breakeven(query);
    TableRow row;
    row.scenario = scenario.name;
    row.degree = degree.value();
    row.speedup = point.resolved_speedup;
    row.rate_factor = rate_factor;
    row.calls = point.calls;
    row.runtime = point.runtime;
    row.calls_display = format_count(point.calls);
    row.runtime_display = format_duration(point.runtime);
    return row;
}

std::vector<TableRow> run_sweep(const SweepSpec& spec) {
    if (spec.degrees.empty() || spec.parallelism.empty() ||
        spec.rate_factors.empty()) {
        throw std::domain_error(
            "sweep needs at least one degree, one parallelism configuration, "
            "and one rate factor");
    }
    const std::size_t a = spec.degrees.size();
    const std::size_t b = spec.parallelism.size();
    const std::size_t c = spec.rate_factors.size();
    if (a > kMaxSweepRows / b || a * b > kMaxSweepRows / c) {
        throw std::domain_error("sweep exceeds " +
                                std::to_string(kMaxSweepRows) + " rows");
    }
    const std::size_t cells = a * b * c;
    std::vector<TableRow> rows;
    rows.reserve(cells);
    for (const SpeedupDegree& degree : spec.degrees) {
        for (const ParallelismConfig& parallelism : spec.parallelism) {
            for (double rate : spec.rate_factors) {
                try {
                    rows.push_back(
                        make_row(spec.scenario, degree, parallelism, rate));
                } catch (const std::exception& e) {
                    throw std::domain_error(
                        "sweep cell (degree=" + to_shortest_string(degree.value()) +
                        ", S=" + to_shortest_string(resolve_speedup(parallelism)) +
                        ", R=" + to_shortest_string(rate) + "): " + e.what());
                }
            }
        }
    }
    return rows;
}

PresetTable parse_preset(std::string_view name) {
    if (name == "table1") {
        return PresetTable::table1;
    }
    if (name == "table2") {
        return PresetTable::table2;
    }
    throw std::domain_error("unknown preset '" + std::string(name) +
                            "'; expected table1 or table2");
}

std::vector<TableRow> preset_rows(PresetTable preset) {
    const Scenario& lower = must_find("lower-bound-sc");
    const Scenario& annealing = must_find("sk-annealing-sc");
    std::vector<TableRow> rows;
    if (preset == PresetTable::table1) {
        for (double degree : kPresetDegrees) {
            for (double speedup : kPresetSpeedups) {
                for (const Scenario* scenario : {&lower, &annealing}) {
                    rows.push_back(make_row(*scenario, SpeedupDegree{degree},
                                            FixedSpeedup{speedup}, 1.0));
                }
            }
        }
    } else {
        for (double rate : kPresetRates) {
            for (const Scenario* scenario : {&lower, &annealing}) {
                rows.push_back(make_row(*scenario, SpeedupDegree{2.0},
                                        FixedSpeedup{1e3}, rate));
            }
        }
    }
    return rows;
}

std::string render_preset(PresetTable preset) {
    const std::vector<TableRow> rows = preset_rows(preset);
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"degree", "S", "R", "M* [lower-bound-sc]",
                    "T* [lower-bound-sc]", "M* [sk-annealing-sc]",
                    "T* [sk-annealing-sc]"});
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        const TableRow& lower = rows[i];
        const TableRow& annealing = rows[i + 1];
        grid.push_back({to_shortest_string(lower.degree),
                        format_sig2(lower.speedup),
                        format_sig2(lower.rate_factor), lower.calls_display,
                        lower.runtime_display, annealing.calls_display,
                        annealing.runtime_display});
    }
    return render_aligned(grid);
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "text") {
        return ExportFormat::text;
    }
    if (name == "csv") {
        return ExportFormat::csv;
    }
    if (name == "json-lines") {
        return ExportFormat::json_lines;
    }
    throw std::domain_error("unknown format '" + std::string(name) +
                            "'; expected text, csv, or json-lines");
}

std::string export_rows(std::span<const TableRow> rows, ExportFormat format) {
    if (format == ExportFormat::csv) {
        std::string out = "scenario,degree,S,R,M_star,T_star_seconds\n";
        for (const TableRow& row : rows) {
            out += csv_escape(row.scenario);
            out.push_back(',');
            out += to_shortest_string(row.degree);
            out.push_back(',');
            out += to_shortest_string(row.speedup);
            out.push_back(',');
            out += to_shortest_string(row.rate_factor);
            out.push_back(',');
            out += to_shortest_string(row.calls);
            out.push_back(',');
            out += to_shortest_string(row.runtime.seconds());
            out.push_back('\n');
        }
        return out;
    }
    if (format == ExportFormat::json_lines) {
        std::string out;
        for (const TableRow& row : rows) {
            nlohmann::ordered_json line;
            line["scenario"] = row.scenario;
            line["degree"] = row.degree;
            line["S"] = row.speedup;
            line["R"] = row.rate_factor;
            line["M_star"] = row.calls;
            line["T_star_seconds"] = row.runtime.seconds();
            out += line.dump();
            out.push_back('\n');
        }
        return out;
    }
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"scenario", "degree", "S", "R", "M*", "T*"});
    for (const TableRow& row : rows) {
        grid.push_back({row.scenario, to_shortest_string(row.degree),
                        to_shortest_string(row.speedup),
                        to_shortest_string(row.rate_factor), row.calls_display,
                        row.runtime_display});
    }
    return render_aligned(grid);
}

}  // namespace qcross
