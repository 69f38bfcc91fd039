#include "qcross/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "qcross/fault_tolerance.hpp"

namespace qcross {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ScenarioError(field + ": " + why);
}

const json& member(const json& object, const std::string& path,
                   const char* key) {
    auto it = object.find(key);
    if (it == object.end()) {
        fail(path.empty() ? key : path + "." + key, "missing required field");
    }
    return *it;
}

std::string joined(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<const char*> known) {
    for (const auto& item : object.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            fail(joined(path, item.key()), "unknown field");
        }
    }
}

std::string require_string(const json& value, const std::string& field) {
    if (!value.is_string()) {
        fail(field, "must be a string");
    }
    return value.get<std::string>();
}

std::int64_t require_positive_integer(const json& value,
                                      const std::string& field) {
    if (!value.is_number_integer()) {
        fail(field, "must be an integer");
    }
    const std::int64_t v = value.get<std::int64_t>();
    if (v < 1) {
        fail(field, "must be >= 1");
    }
    return v;
}

double require_positive_number(const json& value, const std::string& field) {
    if (!value.is_number()) {
        fail(field, "must be a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v) || v <= 0.0) {
        fail(field, "must be positive and finite");
    }
    return v;
}

Duration require_duration(const json& value, const std::string& field) {
    if (!value.is_string()) {
        fail(field, "must be a duration string like \"17 ms\"");
    }
    Duration d;
    try {
        d = parse_duration(value.get<std::string>());
    } catch (const std::exception& e) {
        fail(field, e.what());
    }
    if (d.is_zero()) {
        fail(field, "must be positive");
    }
    return d;
}

QuantumCost parse_quantum(const json& object) {
    if (!object.is_object()) {
        fail("quantum", "must be an object");
    }
    const bool direct = object.contains("t_q");
    const bool counted = object.contains("toffoli_count") ||
                         object.contains("profile") ||
                         object.contains("distance");
    if (direct && counted) {
        fail("quantum", "cannot combine t_q with a Toffoli-count cost");
    }
    if (direct) {
        reject_unknown(object, "quantum", {"t_q"});
        return DirectQuantumCost{require_duration(object["t_q"], "quantum.t_q")};
    }
    if (!object.contains("toffoli_count")) {
        fail("quantum", "needs either t_q or toffoli_count with profile");
    }
    reject_unknown(object, "quantum", {"toffoli_count", "profile", "distance"});
    ToffoliCountCost cost;
    cost.toffoli_count = require_positive_integer(
        member(object, "quantum", "toffoli_count"), "quantum.toffoli_count");
    cost.profile =
        require_string(member(object, "quantum", "profile"), "quantum.profile");
    if (find_profile(cost.profile) == nullptr) {
        fail("quantum.profile",
             "unknown hardware profile '" + cost.profile + "'");
    }
    if (object.contains("distance")) {
        const std::int64_t d =
            require_positive_integer(object["distance"], "quantum.distance");
        if (d < 3 || d > kMaxCodeDistance) {
            fail("quantum.distance", "must lie in [3, " +
                                         std::to_string(kMaxCodeDistance) +
                                         "]");
        }
        cost.distance = static_cast<int>(d);
    }
    return cost;
}

ClassicalCost parse_classical(const json& object) {
    if (!object.is_object()) {
        fail("classical", "must be an object");
    }
    const bool direct = object.contains("t_c");
    const bool counted =
        object.contains("cycles") || object.contains("clock_hz");
    if (direct && counted) {
        fail("classical", "cannot combine t_c with a cycle-count cost");
    }
    if (direct) {
        reject_unknown(object, "classical", {"t_c"});
        return DirectClassicalCost{
            require_duration(object["t_c"], "classical.t_c")};
    }
    if (!object.contains("cycles")) {
        fail("classical", "needs either t_c or cycles with clock_hz");
    }
    reject_unknown(object, "classical", {"cycles", "clock_hz"});
    CycleCountCost cost;
    cost.cycles = require_positive_integer(
        member(object, "classical", "cycles"), "classical.cycles");
    cost.clock_hz = require_positive_number(
        member(object, "classical", "clock_hz"), "classical.clock_hz");
    return cost;
}

}  // namespace

Duration resolve_quantum_cost(const QuantumCost& cost) {
    struct Visitor {
        Duration operator()(const DirectQuantumCost& c) const {
            if (c.t_q.is_zero()) {
                throw std::domain_error("t_q must be positive");
            }
            return c.t_q;
        }
        Duration operator()(const ToffoliCountCost& c) const {
            const HardwareProfile* profile = find_profile(c.profile);
            if (profile == nullptr) {
                throw std::domain_error("unknown hardware profile '" +
                                        c.profile + "'");
            }
            const Duration gate =
                c.distance ? toffoli_gate_time(*profile, *c.distance)
                           : nominal_toffoli_time(*profile);
            return quantum_primitive_time(c.toffoli_count, gate);
        }
    };
    return std::visit(Visitor{}, cost);
}

Duration resolve_classical_cost(const ClassicalCost& cost) {
    struct Visitor {
        Duration operator()(const DirectClassicalCost& c) const {
            if (c.t_c.is_zero()) {
                throw std::domain_error("t_c must be positive");
            }
            return c.t_c;
        }
        Duration operator()(const CycleCountCost& c) const {
            return classical_primitive_time(c.cycles, c.clock_hz);
        }
    };
    return std::visit(Visitor{}, cost);
}

std::int64_t sk_toffoli_count(std::int64_t problem_size) {
    if (problem_size < 2) {
        throw std::domain_error("problem size must be >= 2");
    }
    return 5 * problem_size;
}

std::int64_t grover_min_gates(std::int64_t problem_size) {
    if (problem_size < 1) {
        throw std::domain_error("problem size must be >= 1");
    }
    return problem_size;
}

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> scenarios = [] {
        std::vector<Scenario> list;
        {
            Scenario s;
            s.name = "lower-bound-sc";
            s.problem_size = 100;
            s.degree = SpeedupDegree{2.0};
            s.quantum = DirectQuantumCost{Duration::from_milliseconds(17)};
            s.classical = DirectClassicalCost{Duration::from_nanoseconds(33)};
            s.notes =
                "Oracle-search lower bound (N = 100) on the superconducting "
                "profile; published per-call costs.";
            list.push_back(std::move(s));
        }
        {
            Scenario s;
            s.name = "sk-annealing-sc";
            s.problem_size = 512;
            s.degree = SpeedupDegree{2.0};
            s.quantum = DirectQuantumCost{Duration::from_milliseconds(440)};
            s.classical = DirectClassicalCost{Duration::from_nanoseconds(7)};
            s.notes =
                "Spin-glass annealing step (N = 512), Solovay-Kitaev "
                "compiled; published per-call costs.";
            list.push_back(std::move(s));
        }
        {
            Scenario s;
            s.name = "lower-bound-ion";
            s.problem_size = 100;
            s.degree = SpeedupDegree{2.0};
            s.quantum = ToffoliCountCost{grover_min_gates(100),
                                         "ion-trap-networked", std::nullopt};
            s.classical = DirectClassicalCost{Duration::from_nanoseconds(33)};
            s.notes =
                "Same oracle-search bound with gate times from the networked "
                "ion-trap profile.";
            list.push_back(std::move(s));
        }
        {
            Scenario s;
            s.name = "lower-bound-sc-model";
            s.problem_size = 100;
            s.degree = SpeedupDegree{2.0};
            s.quantum = ToffoliCountCost{grover_min_gates(100),
                                         "superconducting-2020", std::nullopt};
            s.classical = CycleCountCost{100, 3e9};
            s.notes =
                "Oracle-search bound rebuilt from counts: N Toffolis against "
                "N cycles at 3 GHz.";
            list.push_back(std::move(s));
        }
        {
            Scenario s;
            s.name = "sk-annealing-sc-model";
            s.problem_size = 512;
            s.degree = SpeedupDegree{2.0};
            s.quantum = ToffoliCountCost{sk_toffoli_count(512),
                                         "superconducting-2020", std::nullopt};
            s.classical = CycleCountCost{21, 3e9};
            s.notes =
                "Annealing step rebuilt from counts: 5N Toffolis against 21 "
                "cycles at 3 GHz.";
            list.push_back(std::move(s));
        }
        for (const Scenario& s : list) {
            resolve_quantum_cost(s.quantum);
            resolve_classical_cost(s.classical);
        }
        return list;
    }();
    return scenarios;
}

const Scenario* find_scenario(std::string_view name) {
    for (const Scenario& s : builtin_scenarios()) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

Scenario load_scenario(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object()) {
        throw ScenarioError("scenario document must be a JSON object");
    }
    reject_unknown(document, "",
                   {"name", "problem_size", "degree", "quantum", "classical",
                    "notes", "expected_calls"});

    Scenario scenario;
    scenario.name = require_string(member(document, "", "name"), "name");
    if (scenario.name.empty()) {
        fail("name", "must be non-empty");
    }
    scenario.problem_size = require_positive_integer(
        member(document, "", "problem_size"), "problem_size");
    if (document.contains("degree")) {
        const json& deg = document["degree"];
        if (!deg.is_number()) {
            fail("degree", "must be a number");
        }
        try {
            scenario.degree = SpeedupDegree{deg.get<double>()};
        } catch (const std::exception& e) {
            fail("degree", e.what());
        }
    }
    scenario.quantum = parse_quantum(member(document, "", "quantum"));
    scenario.classical = parse_classical(member(document, "", "classical"));
    if (document.contains("notes")) {
        scenario.notes = require_string(document["notes"], "notes");
    }
    if (document.contains("expected_calls")) {
        scenario.expected_calls =
            require_positive_number(document["expected_calls"], "expected_calls");
    }
    try {
        resolve_quantum_cost(scenario.quantum);
    } catch (const std::exception& e) {
        fail("quantum", e.what());
    }
    try {
        resolve_classical_cost(scenario.classical);
    } catch (const std::exception& e) {
        fail("classical", e.what());
    }
    return scenario;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open scenario file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) {
        throw IoError("failed reading scenario file '" + path.string() + "'");
    }
    return load_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& scenario) {
    ordered_json document;
    document["name"] = scenario.name;
    document["problem_size"] = scenario.problem_size;
    document["degree"] = scenario.degree.value();

    ordered_json quantum;
    if (const auto* direct = std::get_if<DirectQuantumCost>(&scenario.quantum)) {
        quantum["t_q"] = to_string(direct->t_q);
    } else {
        const auto& counted = std::get<ToffoliCountCost>(scenario.quantum);
        quantum["toffoli_count"] = counted.toffoli_count;
        quantum["profile"] = counted.profile;
        if (counted.distance) {
            quantum["distance"] = *counted.distance;
        }
    }
    document["quantum"] = std::move(quantum);

    ordered_json classical;
    if (const auto* direct =
            std::get_if<DirectClassicalCost>(&scenario.classical)) {
        classical["t_c"] = to_string(direct->t_c);
    } else {
        const auto& counted = std::get<CycleCountCost>(scenario.classical);
        classical["cycles"] = counted.cycles;
        classical["clock_hz"] = counted.clock_hz;
    }
    document["classical"] = std::move(classical);

    if (!scenario.notes.empty()) {
        document["notes"] = scenario.notes;
    }
    if (scenario.expected_calls) {
        document["expected_calls"] = *scenario.expected_calls;
    }
    return document.dump(2) + "\n";
}

}  // namespace qcross
