#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcross/duration.hpp"
#include "qcross/speedup_model.hpp"

namespace qcross {

/// Quantum cost given directly as a per-call time.
struct DirectQuantumCost {
    Duration t_q;
    friend bool operator==(DirectQuantumCost, DirectQuantumCost) = default;
};

/// Quantum cost derived from a Toffoli count on a named hardware profile.
/// Without `distance` the profile's nominal (published) gate time is used;
/// with it, the raw gate-time model at that distance.
struct ToffoliCountCost {
    std::int64_t toffoli_count = 0;
    std::string profile;
    std::optional<int> distance;
    friend bool operator==(const ToffoliCountCost&,
                           const ToffoliCountCost&) = default;
};

using QuantumCost = std::variant<DirectQuantumCost, ToffoliCountCost>;

/// Classical cost given directly as a per-call time.
struct DirectClassicalCost {
    Duration t_c;
    friend bool operator==(DirectClassicalCost, DirectClassicalCost) = default;
};

/// Classical cost derived from a cycle count at a clock rate.
struct CycleCountCost {
    std::int64_t cycles = 0;
    double clock_hz = 0.0;
    friend bool operator==(CycleCountCost, CycleCountCost) = default;
};

using ClassicalCost = std::variant<DirectClassicalCost, CycleCountCost>;

/// A named, reusable comparison setup: problem size, advantage degree, and
/// the two primitive costs. `expected_calls` is bookkeeping only; nothing
/// derives from it.
struct Scenario {
    std::string name;
    std::int64_t problem_size = 0;  // N, metadata for the cost derivations
    SpeedupDegree degree{2.0};
    QuantumCost quantum;
    ClassicalCost classical;
    std::string notes;
    std::optional<double> expected_calls;
    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The effective t_q. Throws std::domain_error for an unknown profile name
/// or an unusable cost.
Duration resolve_quantum_cost(const QuantumCost& cost);

/// The effective t_c.
Duration resolve_classical_cost(const ClassicalCost& cost);

/// The built-in scenarios, in a fixed order, names unique.
const std::vector<Scenario>& builtin_scenarios();

/// Pointer into builtin_scenarios(), or nullptr if the name is unknown.
const Scenario* find_scenario(std::string_view name);

/// Toffoli count of one Solovay-Kitaev-compiled annealing step: 5 * N.
/// Requires N >= 2.
std::int64_t sk_toffoli_count(std::int64_t problem_size);

/// Lower bound on gates per Grover-style oracle call: N. Requires N >= 1.
std::int64_t grover_min_gates(std::int64_t problem_size);

/// Malformed or invalid scenario document. The message names the offending
/// field, e.g. "quantum.t_q: duration must be positive".
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unreadable path, failed write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses and fully validates one scenario document (JSON text). Unknown
/// fields are rejected. Throws ScenarioError.
Scenario load_scenario(const std::string& text);

/// load_scenario on a file's contents. Throws IoError if the file cannot be
/// read, ScenarioError if it cannot be parsed or validated.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Serializes to the same JSON document form load_scenario accepts.
/// Durations are written in seconds with shortest round-trip decimals, so
/// load_scenario(serialize_scenario(s)) == s exactly.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace qcross
