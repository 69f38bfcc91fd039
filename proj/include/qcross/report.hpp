#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcross/duration.hpp"
#include "qcross/scenarios.hpp"
#include "qcross/speedup_model.hpp"

namespace qcross {

/// One breakeven result with both full-precision and display forms. The
/// display strings are derived from the numeric fields at construction, so
/// exports cannot drift from the numbers.
struct TableRow {
    std::string scenario;
    double degree = 0.0;
    double speedup = 0.0;      // resolved S
    double rate_factor = 0.0;  // R
    double calls = 0.0;        // M*
    Duration runtime;          // T*
    std::string calls_display;
    std::string runtime_display;
};

/// Builds a TableRow from one breakeven evaluation.
TableRow make_row(const Scenario& scenario, SpeedupDegree degree,
                  const ParallelismConfig& parallelism, double rate_factor);

/// A cross-product of parameter values to evaluate one scenario over.
struct SweepSpec {
    Scenario scenario;
    std::vector<SpeedupDegree> degrees;
    std::vector<ParallelismConfig> parallelism;
    std::vector<double> rate_factors;
};

/// run_sweep refuses cross-products larger than this.
inline constexpr std::size_t kMaxSweepRows = 1'000'000;

/// Evaluates the full cross-product, ordered degree-major, then parallelism,
/// then rate factor, each in the order given. All lists must be non-empty.
/// A failure in any cell aborts the sweep with the cell identified in the
/// error message.
std::vector<TableRow> run_sweep(const SweepSpec& spec);

enum class PresetTable {
    table1,  // lower-bound-sc and sk-annealing-sc over degree x S, R = 1
    table2,  // the same pair at degree 2, S = 1e3, over R in {10, 100, 1000}
};

/// Accepts "table1" or "table2". Throws std::domain_error otherwise.
PresetTable parse_preset(std::string_view name);

/// The preset's rows: degree-major, then S, then R, the two scenarios
/// innermost. table1 yields 18 rows, table2 yields 6.
std::vector<TableRow> preset_rows(PresetTable preset);

/// The preset rendered as an aligned text table (one header line, one line
/// per degree/S/R combination, both scenarios side by side).
std::string render_preset(PresetTable preset);

enum class ExportFormat { text, csv, json_lines };

/// Accepts "text", "csv", or "json-lines". Throws std::domain_error
/// otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Renders rows in the chosen format.
///  - text: aligned columns with display-form M* and T*.
///  - csv: header "scenario,degree,S,R,M_star,T_star_seconds", one row per
///    line, numeric fields at full shortest-round-trip precision.
///  - json-lines: one JSON object per line with the same keys as the CSV
///    header; numbers stay numbers.
/// Output is deterministic: equal rows give byte-identical output.
std::string export_rows(std::span<const TableRow> rows, ExportFormat format);

}  // namespace qcross
