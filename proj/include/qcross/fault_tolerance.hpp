#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcross/duration.hpp"

namespace qcross {

/// Physical-layer parameters from which error-corrected gate costs derive.
struct HardwareProfile {
    std::string name;
    Duration syndrome_cycle;   // tau_s: one round of syndrome extraction at
                               // sustained decoder throughput
    Duration decode_latency;   // l_r: end-of-gate reaction latency, may be 0
    double gate_prefactor = 0.0;  // C_G: syndrome rounds per logical Toffoli,
                                  // per unit code distance
    Duration two_qubit_gate;   // informational: bare physical 2-qubit gate
    Duration measurement;      // informational: bare physical measurement;
                               // also the physical syndrome time quoted in
                               // overhead-factor reports
    double physical_error_rate = 0.0;  // p
    double error_threshold = 0.0;      // p_th; profiles require p < p_th
};

/// Throws std::domain_error naming the offending field if the profile is
/// unusable (non-positive times where positivity is required, p or p_th
/// outside (0, 1), p >= p_th, C_G <= 0).
void validate(const HardwareProfile& profile);

/// Code distance the published profile numbers are quoted at. Distance
/// selection for a concrete workload typically lands nearby (29 for the
/// headline case); the published figures round from this design point.
inline constexpr int kReferenceCodeDistance = 30;

/// Largest code distance the selector will consider.
inline constexpr int kMaxCodeDistance = 99;

/// Result of picking the cheapest code distance that meets an error budget.
struct CodeDistanceSelection {
    int distance = 0;                     // odd, in [3, kMaxCodeDistance]
    double per_round_logical_error = 0.0; // A * (p/p_th)^((distance+1)/2)
    double expected_failures = 0.0;       // error rate * rounds * qubits
    double budget = 0.0;                  // epsilon the selection satisfies
};

/// Error-corrected factory figures at one code distance.
struct FactoryEstimate {
    Duration toffoli_time;
    std::int64_t physical_qubits = 0;
    double spacetime_volume = 0.0;  // physical_qubits * toffoli_time, in
                                    // qubit-seconds
};

/// t_G = C_G * (code_distance * tau_s + l_r): the wall time of one logical
/// Toffoli, dominated by syndrome rounds. Accepts any integer distance >= 3.
Duration toffoli_gate_time(const HardwareProfile& profile, int code_distance);

/// The profile's published gate time: toffoli_gate_time at the reference
/// distance, rounded to 2 significant figures. Scenario costs quoted in
/// Toffoli counts use this unless they pin an explicit distance.
Duration nominal_toffoli_time(const HardwareProfile& profile);

/// Smallest odd code distance d in [3, kMaxCodeDistance] such that the
/// expected logical failure count
///   prefactor * (p/p_th)^((d+1)/2) * (C_G * d * gate_count) * logical_qubits
/// stays within `budget`. Throws std::domain_error if even the maximum
/// distance cannot meet the budget, or on invalid arguments.
CodeDistanceSelection select_code_distance(std::int64_t gate_count,
                                           std::int64_t logical_qubits,
                                           const HardwareProfile& profile,
                                           double prefactor, double budget);

/// Physical qubits of one magic-state factory: a 12d x 6d patch, doubled for
/// routing and ancilla space. 144 * d^2. Accepts any integer distance >= 3.
std::int64_t factory_footprint(int code_distance);

/// physical_qubits * duration, in qubit-seconds.
double spacetime_volume(std::int64_t physical_qubits, Duration duration);

/// Ratio of error-corrected gate wall time to the bare physical syndrome
/// time: gate_prefactor * (round_budget / physical_syndrome_time). The
/// round_budget is the per-gate time at unit prefactor, d * tau_s + l_r.
double ec_overhead(double gate_prefactor, Duration round_budget,
                   Duration physical_syndrome_time);

/// Gate time, footprint, and spacetime volume at one code distance.
FactoryEstimate estimate_factory(const HardwareProfile& profile,
                                 int code_distance);

/// t_Q for a primitive of `toffoli_count` sequential Toffolis.
Duration quantum_primitive_time(std::int64_t toffoli_count,
                                Duration toffoli_time);

/// t_C for a primitive of `cycle_count` cycles at `clock_hz`.
Duration classical_primitive_time(std::int64_t cycle_count, double clock_hz);

/// The built-in hardware profiles, validated, in a fixed order.
const std::vector<HardwareProfile>& builtin_profiles();

/// Pointer into builtin_profiles(), or nullptr if the name is unknown.
const HardwareProfile* find_profile(std::string_view name);

}  // namespace qcross
