#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcross/decimal.hpp"
#include "qcross/fault_tolerance.hpp"
#include "qcross/format.hpp"
#include "qcross/report.hpp"
#include "qcross/scenarios.hpp"
#include "qcross/speedup_model.hpp"

namespace {

using namespace qcross;

// Writes results to stdout or, when set, to a file. File problems are I/O
// errors (exit code 2), not validation errors.
void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open output file '" + output_path + "'");
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError("failed writing output file '" + output_path + "'");
    }
}

double parse_double_arg(std::string_view text, const std::string& what) {
    double value = 0.0;
    auto [next, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || next != text.data() + text.size()) {
        throw std::domain_error(what + ": malformed number '" +
                                std::string(text) + "'");
    }
    return value;
}

std::int64_t parse_int_arg(std::string_view text, const std::string& what) {
    std::int64_t value = 0;
    auto [next, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || next != text.data() + text.size()) {
        throw std::domain_error(what + ": malformed integer '" +
                                std::string(text) + "'");
    }
    return value;
}

// "ALPHA,P" for the law flags.
std::pair<double, std::int64_t> parse_law(const std::string& text,
                                          const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::domain_error(flag + ": expected ALPHA,P, got '" + text +
                                "'");
    }
    const double alpha = parse_double_arg(text.substr(0, comma), flag);
    const std::int64_t p = parse_int_arg(text.substr(comma + 1), flag);
    return {alpha, p};
}

Scenario resolve_scenario_arg(const std::string& arg) {
    if (const Scenario* s = find_scenario(arg)) {
        return *s;
    }
    if (std::filesystem::exists(arg)) {
        return load_scenario_file(arg);
    }
    throw std::domain_error("unknown scenario '" + arg +
                            "': not a built-in name or an existing file");
}

// Fixed speedups first, then Amdahl, then Gustafson, each in flag order.
std::vector<ParallelismConfig> parallelism_from_flags(
    const std::vector<double>& fixed, const std::vector<std::string>& amdahl,
    const std::vector<std::string>& gustafson) {
    std::vector<ParallelismConfig> configs;
    for (double s : fixed) {
        configs.emplace_back(FixedSpeedup{s});
    }
    for (const std::string& text : amdahl) {
        const auto [alpha, p] = parse_law(text, "--amdahl");
        configs.emplace_back(AmdahlLaw{alpha, p});
    }
    for (const std::string& text : gustafson) {
        const auto [alpha, p] = parse_law(text, "--gustafson");
        configs.emplace_back(GustafsonLaw{alpha, p});
    }
    return configs;
}

std::string describe_quantum(const QuantumCost& cost) {
    if (const auto* direct = std::get_if<DirectQuantumCost>(&cost)) {
        return "direct, t_q = " + to_string(direct->t_q);
    }
    const auto& counted = std::get<ToffoliCountCost>(cost);
    std::string out = std::to_string(counted.toffoli_count) +
                      " Toffolis on profile " + counted.profile;
    if (counted.distance) {
        out += " at code distance " + std::to_string(*counted.distance);
    } else {
        out += " at the nominal gate time";
    }
    return out;
}

std::string describe_classical(const ClassicalCost& cost) {
    if (const auto* direct = std::get_if<DirectClassicalCost>(&cost)) {
        return "direct, t_c = " + to_string(direct->t_c);
    }
    const auto& counted = std::get<CycleCountCost>(cost);
    return std::to_string(counted.cycles) + " cycles at " +
           to_shortest_string(counted.clock_hz) + " Hz";
}

// Cost flags shared by breakeven and sweep: a scenario by name or file, or an
// ad-hoc --tq/--tc pair, but never both.
Scenario scenario_from_cost_flags(const std::string& scenario_arg,
                                  const std::string& t_q,
                                  const std::string& t_c) {
    if (!scenario_arg.empty()) {
        if (!t_q.empty() || !t_c.empty()) {
            throw std::domain_error(
                "--scenario cannot be combined with --tq/--tc");
        }
        return resolve_scenario_arg(scenario_arg);
    }
    if (t_q.empty() || t_c.empty()) {
        throw std::domain_error(
            "provide --scenario NAME, or both --tq and --tc");
    }
    Scenario scenario;
    scenario.name = "ad-hoc";
    scenario.problem_size = 1;
    scenario.quantum = DirectQuantumCost{parse_duration(t_q)};
    scenario.classical = DirectClassicalCost{parse_duration(t_c)};
    return scenario;
}

struct BreakevenOptions {
    std::string scenario;
    std::string t_q;
    std::string t_c;
    double degree = 0.0;  // 0 means "not given"
    std::vector<double> fixed;
    std::vector<std::string> amdahl;
    std::vector<std::string> gustafson;
    double rate = 1.0;
    std::string format = "text";
    std::string output;
};

int run_breakeven(const BreakevenOptions& opt) {
    const Scenario scenario =
        scenario_from_cost_flags(opt.scenario, opt.t_q, opt.t_c);
    const SpeedupDegree degree =
        opt.degree != 0.0 ? SpeedupDegree{opt.degree} : scenario.degree;
    std::vector<ParallelismConfig> configs =
        parallelism_from_flags(opt.fixed, opt.amdahl, opt.gustafson);
    if (configs.size() > 1) {
        throw std::domain_error(
            "breakeven takes at most one parallelism flag; use sweep for "
            "several");
    }
    if (configs.empty()) {
        configs.emplace_back(FixedSpeedup{1.0});
    }
    const TableRow row = make_row(scenario, degree, configs.front(), opt.rate);
    emit(export_rows(std::span(&row, 1), parse_export_format(opt.format)),
         opt.output);
    return 0;
}

struct SweepOptions {
    std::string scenario;
    std::string t_q;
    std::string t_c;
    std::vector<double> degrees;
    std::vector<double> fixed;
    std::vector<std::string> amdahl;
    std::vector<std::string> gustafson;
    std::vector<double> rates;
    std::string format = "text";
    std::string output;
};

int run_sweep_command(const SweepOptions& opt) {
    SweepSpec spec;
    spec.scenario = scenario_from_cost_flags(opt.scenario, opt.t_q, opt.t_c);
    if (opt.degrees.empty()) {
        spec.degrees.push_back(spec.scenario.degree);
    } else {
        for (double d : opt.degrees) {
            spec.degrees.emplace_back(SpeedupDegree{d});
        }
    }
    spec.parallelism =
        parallelism_from_flags(opt.fixed, opt.amdahl, opt.gustafson);
    if (spec.parallelism.empty()) {
        spec.parallelism.emplace_back(FixedSpeedup{1.0});
    }
    spec.rate_factors = opt.rates.empty() ? std::vector<double>{1.0} : opt.rates;
    const std::vector<TableRow> rows = run_sweep(spec);
    emit(export_rows(rows, parse_export_format(opt.format)), opt.output);
    return 0;
}

struct TableOptions {
    std::string preset;
    std::string format = "text";
    std::string output;
};

int run_table(const TableOptions& opt) {
    const PresetTable preset = parse_preset(opt.preset);
    const ExportFormat format = parse_export_format(opt.format);
    if (format == ExportFormat::text) {
        emit(render_preset(preset), opt.output);
    } else {
        emit(export_rows(preset_rows(preset), format), opt.output);
    }
    return 0;
}

struct FactoryOptions {
    std::string profile = "superconducting-2020";
    int distance = kReferenceCodeDistance;
    std::string output;
};

int run_factory(const FactoryOptions& opt) {
    const HardwareProfile* profile = find_profile(opt.profile);
    if (profile == nullptr) {
        throw std::domain_error("unknown hardware profile '" + opt.profile +
                                "'");
    }
    const FactoryEstimate estimate = estimate_factory(*profile, opt.distance);
    const Duration round_budget = Duration::from_seconds(
        opt.distance * profile->syndrome_cycle.seconds() +
        profile->decode_latency.seconds());
    const double overhead = ec_overhead(profile->gate_prefactor, round_budget,
                                        profile->measurement);
    std::string out;
    out += "profile           " + profile->name + "\n";
    out += "code_distance     " + std::to_string(opt.distance) + "\n";
    out += "toffoli_time      " + format_duration_si(estimate.toffoli_time) +
           " (" + to_string(estimate.toffoli_time) + ")\n";
    out += "physical_qubits   " + std::to_string(estimate.physical_qubits) +
           "\n";
    out += "spacetime_volume  " + format_sig2(estimate.spacetime_volume) +
           " qubit-seconds (" + to_shortest_string(estimate.spacetime_volume) +
           ")\n";
    out += "ec_overhead       " + format_sig2(overhead) + " (" +
           to_shortest_string(overhead) + ")\n";
    emit(out, opt.output);
    return 0;
}

struct DistanceOptions {
    std::int64_t gates = 0;
    std::int64_t qubits = 0;
    std::string profile = "superconducting-2020";
    double prefactor = 0.1;
    double budget = 0.01;
    std::string output;
};

int run_distance(const DistanceOptions& opt) {
    const HardwareProfile* profile = find_profile(opt.profile);
    if (profile == nullptr) {
        throw std::domain_error("unknown hardware profile '" + opt.profile +
                                "'");
    }
    const CodeDistanceSelection selection = select_code_distance(
        opt.gates, opt.qubits, *profile, opt.prefactor, opt.budget);
    std::string out;
    out += "profile                  " + profile->name + "\n";
    out += "code_distance            " + std::to_string(selection.distance) +
           "\n";
    out += "per_round_logical_error  " +
           to_shortest_string(selection.per_round_logical_error) + "\n";
    out += "expected_failures        " +
           to_shortest_string(selection.expected_failures) + "\n";
    out += "budget                   " + to_shortest_string(selection.budget) +
           "\n";
    emit(out, opt.output);
    return 0;
}

int run_scenario_list() {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"name", "N", "degree", "t_q", "t_c"});
    for (const Scenario& s : builtin_scenarios()) {
        grid.push_back({s.name, std::to_string(s.problem_size),
                        to_shortest_string(s.degree.value()),
                        format_duration_si(resolve_quantum_cost(s.quantum)),
                        format_duration_si(resolve_classical_cost(s.classical))});
    }
    std::string out;
    std::vector<std::size_t> widths;
    for (const auto& line : grid) {
        widths.resize(std::max(widths.size(), line.size()), 0);
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    for (const auto& line : grid) {
        std::string rendered;
        for (std::size_t i = 0; i < line.size(); ++i) {
            rendered += line[i];
            if (i + 1 < line.size()) {
                rendered.append(widths[i] - line[i].size() + 2, ' ');
            }
        }
        out += rendered + "\n";
    }
    emit(out, "");
    return 0;
}

int run_scenario_show(const std::string& name) {
    const Scenario* scenario = find_scenario(name);
    if (scenario == nullptr) {
        throw std::domain_error("unknown scenario '" + name + "'");
    }
    const Duration t_q = resolve_quantum_cost(scenario->quantum);
    const Duration t_c = resolve_classical_cost(scenario->classical);
    std::string out;
    out += "name          " + scenario->name + "\n";
    out += "problem_size  " + std::to_string(scenario->problem_size) + "\n";
    out += "degree        " + to_shortest_string(scenario->degree.value()) +
           "\n";
    out += "quantum       " + describe_quantum(scenario->quantum) + "\n";
    out += "t_q           " + format_duration_si(t_q) + " (" + to_string(t_q) +
           ")\n";
    out += "classical     " + describe_classical(scenario->classical) + "\n";
    out += "t_c           " + format_duration_si(t_c) + " (" + to_string(t_c) +
           ")\n";
    if (!scenario->notes.empty()) {
        out += "notes         " + scenario->notes + "\n";
    }
    if (scenario->expected_calls) {
        out += "expected_calls  " + to_shortest_string(*scenario->expected_calls) +
               "\n";
    }
    emit(out, "");
    return 0;
}

int run_scenario_check(const std::string& path) {
    const Scenario scenario = load_scenario_file(path);
    const Duration t_q = resolve_quantum_cost(scenario.quantum);
    const Duration t_c = resolve_classical_cost(scenario.classical);
    std::cout << "OK " << scenario.name << ": t_q = " << to_string(t_q)
              << ", t_c = " << to_string(t_c)
              << ", degree = " << to_shortest_string(scenario.degree.value())
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qcross: breakeven call counts and runtimes for error-corrected "
        "quantum advantage"};
    app.require_subcommand(1);
    std::function<int()> action;

    BreakevenOptions breakeven_opt;
    CLI::App* breakeven_cmd = app.add_subcommand(
        "breakeven", "Breakeven point for one scenario or cost pair");
    breakeven_cmd->add_option("--scenario", breakeven_opt.scenario,
                              "Built-in scenario name or scenario file path");
    breakeven_cmd->add_option("--tq", breakeven_opt.t_q,
                              "Quantum per-call time, e.g. '17 ms'");
    breakeven_cmd->add_option("--tc", breakeven_opt.t_c,
                              "Classical per-call time, e.g. '33 ns'");
    breakeven_cmd->add_option("--degree", breakeven_opt.degree,
                              "Advantage degree d > 1");
    breakeven_cmd->add_option("--s", breakeven_opt.fixed,
                              "Fixed classical speedup S >= 1");
    breakeven_cmd->add_option("--amdahl", breakeven_opt.amdahl,
                              "Amdahl speedup as ALPHA,P");
    breakeven_cmd->add_option("--gustafson", breakeven_opt.gustafson,
                              "Gustafson speedup as ALPHA,P");
    breakeven_cmd->add_option("--rate", breakeven_opt.rate,
                              "Toffoli rate factor R >= 1");
    breakeven_cmd->add_option("--format", breakeven_opt.format,
                              "text, csv, or json-lines");
    breakeven_cmd->add_option("--output", breakeven_opt.output,
                              "Write results to a file instead of stdout");
    breakeven_cmd->callback(
        [&] { action = [&] { return run_breakeven(breakeven_opt); }; });

    SweepOptions sweep_opt;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Breakeven points over a parameter cross-product");
    sweep_cmd->add_option("--scenario", sweep_opt.scenario,
                          "Built-in scenario name or scenario file path");
    sweep_cmd->add_option("--tq", sweep_opt.t_q,
                          "Quantum per-call time, e.g. '17 ms'");
    sweep_cmd->add_option("--tc", sweep_opt.t_c,
                          "Classical per-call time, e.g. '33 ns'");
    sweep_cmd->add_option("--degree", sweep_opt.degrees,
                          "Advantage degree d > 1 (repeatable)");
    sweep_cmd->add_option("--s", sweep_opt.fixed,
                          "Fixed classical speedup (repeatable)");
    sweep_cmd->add_option("--amdahl", sweep_opt.amdahl,
                          "Amdahl speedup as ALPHA,P (repeatable)");
    sweep_cmd->add_option("--gustafson", sweep_opt.gustafson,
                          "Gustafson speedup as ALPHA,P (repeatable)");
    sweep_cmd->add_option("--rate", sweep_opt.rates,
                          "Toffoli rate factor R >= 1 (repeatable)");
    sweep_cmd->add_option("--format", sweep_opt.format,
                          "text, csv, or json-lines");
    sweep_cmd->add_option("--output", sweep_opt.output,
                          "Write results to a file instead of stdout");
    sweep_cmd->callback(
        [&] { action = [&] { return run_sweep_command(sweep_opt); }; });

    TableOptions table_opt;
    CLI::App* table_cmd =
        app.add_subcommand("table", "Reproduce a published comparison table");
    table_cmd->add_option("--preset", table_opt.preset, "table1 or table2")
        ->required();
    table_cmd->add_option("--format", table_opt.format,
                          "text, csv, or json-lines");
    table_cmd->add_option("--output", table_opt.output,
                          "Write results to a file instead of stdout");
    table_cmd->callback([&] { action = [&] { return run_table(table_opt); }; });

    FactoryOptions factory_opt;
    CLI::App* factory_cmd = app.add_subcommand(
        "factory", "Error-corrected factory figures for a profile");
    factory_cmd->add_option("--profile", factory_opt.profile,
                            "Hardware profile name");
    factory_cmd->add_option("--distance", factory_opt.distance,
                            "Code distance (default reference distance)");
    factory_cmd->add_option("--output", factory_opt.output,
                            "Write results to a file instead of stdout");
    factory_cmd->callback(
        [&] { action = [&] { return run_factory(factory_opt); }; });

    DistanceOptions distance_opt;
    CLI::App* distance_cmd = app.add_subcommand(
        "distance", "Smallest code distance meeting an error budget");
    distance_cmd->add_option("--gates", distance_opt.gates, "Logical gate count")
        ->required();
    distance_cmd->add_option("--qubits", distance_opt.qubits,
                             "Logical qubit count")
        ->required();
    distance_cmd->add_option("--profile", distance_opt.profile,
                             "Hardware profile name");
    distance_cmd->add_option("--prefactor", distance_opt.prefactor,
                             "Logical error model prefactor A");
    distance_cmd->add_option("--budget", distance_opt.budget,
                             "Total failure budget epsilon");
    distance_cmd->add_option("--output", distance_opt.output,
                             "Write results to a file instead of stdout");
    distance_cmd->callback(
        [&] { action = [&] { return run_distance(distance_opt); }; });

    CLI::App* scenario_cmd =
        app.add_subcommand("scenario", "Inspect and validate scenarios");
    scenario_cmd->require_subcommand(1);
    CLI::App* list_cmd =
        scenario_cmd->add_subcommand("list", "List built-in scenarios");
    list_cmd->callback([&] { action = [] { return run_scenario_list(); }; });
    std::string show_name;
    CLI::App* show_cmd =
        scenario_cmd->add_subcommand("show", "Show one built-in scenario");
    show_cmd->add_option("name", show_name, "Scenario name")->required();
    show_cmd->callback(
        [&] { action = [&] { return run_scenario_show(show_name); }; });
    std::string check_path;
    CLI::App* check_cmd = scenario_cmd->add_subcommand(
        "check", "Validate a scenario file and print its resolved costs");
    check_cmd->add_option("file", check_path, "Scenario JSON file")->required();
    check_cmd->callback(
        [&] { action = [&] { return run_scenario_check(check_path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        return action();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
