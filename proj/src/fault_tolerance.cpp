#include "qcross/fault_tolerance.hpp"

#include <cmath>
#include <stdexcept>

#include "qcross/decimal.hpp"

namespace qcross {

namespace {

void require_distance(int code_distance) {
    if (code_distance < 3) {
        throw std::domain_error("code distance must be >= 3");
    }
}

}  // namespace

void validate(const HardwareProfile& profile) {
    if (profile.name.empty()) {
        throw std::domain_error("profile name must be non-empty");
    }
    if (profile.syndrome_cycle.is_zero()) {
        throw std::domain_error(profile.name +
                                ": syndrome cycle time must be positive");
    }
    if (!(profile.gate_prefactor >= 1.0) ||
        !std::isfinite(profile.gate_prefactor)) {
        // A logical gate cannot take fewer rounds than the code provides.
        throw std::domain_error(profile.name +
                                ": gate prefactor must be at least 1");
    }
    if (profile.two_qubit_gate.is_zero()) {
        throw std::domain_error(profile.name +
                                ": two-qubit gate time must be positive");
    }
    if (profile.measurement.is_zero()) {
        throw std::domain_error(profile.name +
                                ": measurement time must be positive");
    }
    if (!(profile.physical_error_rate > 0.0) ||
        !(profile.physical_error_rate < 1.0)) {
        throw std::domain_error(profile.name +
                                ": physical error rate must lie in (0, 1)");
    }
    if (!(profile.error_threshold > 0.0) || !(profile.error_threshold < 1.0)) {
        throw std::domain_error(profile.name +
                                ": error threshold must lie in (0, 1)");
    }
    if (profile.physical_error_rate >= profile.error_threshold) {
        throw std::domain_error(profile.name +
                                ": physical error rate must be below threshold");
    }
}

Duration toffoli_gate_time(const HardwareProfile& profile, int code_distance) {
    validate(profile);
    require_distance(code_distance);
    const double seconds =
        profile.gate_prefactor * (code_distance * profile.syndrome_cycle.seconds() +
                                  profile.decode_latency.seconds());
    return Duration::from_seconds(seconds);
}

Duration nominal_toffoli_time(const HardwareProfile& profile) {
    const Duration raw = toffoli_gate_time(profile, kReferenceCodeDistance);
    return Duration::from_seconds(round_sig(raw.seconds(), 2));
}

CodeDistanceSelection select_code_distance(std::int64_t gate_count,
                                           std::int64_t logical_qubits,
                                           const HardwareProfile& profile,
                                           double prefactor, double budget) {
    validate(profile);
    if (gate_count < 1) {
        throw std::domain_error("gate count must be >= 1");
    }
    if (logical_qubits < 1) {
        throw std::domain_error("logical qubit count must be >= 1");
    }
    if (!std::isfinite(prefactor) || prefactor <= 0.0) {
        throw std::domain_error("error-model prefactor must be positive");
    }
    if (!std::isfinite(budget) || budget <= 0.0) {
        throw std::domain_error("error budget must be positive");
    }
    const double suppression =
        profile.physical_error_rate / profile.error_threshold;
    for (int d = 3; d <= kMaxCodeDistance; d += 2) {
        const double per_round =
            prefactor * std::pow(suppression, (d + 1) / 2);
        const double rounds = profile.gate_prefactor * d *
                              static_cast<double>(gate_count);
        const double failures =
            per_round * rounds * static_cast<double>(logical_qubits);
        if (failures <= budget) {
            return CodeDistanceSelection{d, per_round, failures, budget};
        }
    }
    throw std::domain_error("no code distance <= " +
                            std::to_string(kMaxCodeDistance) +
                            " meets the error budget");
}

std::int64_t factory_footprint(int code_distance) {
    require_distance(code_distance);
    const std::int64_t d = code_distance;
    return 144 * d * d;
}

double spacetime_volume(std::int64_t physical_qubits, Duration duration) {
    if (physical_qubits < 1) {
        throw std::domain_error("physical qubit count must be >= 1");
    }
    return static_cast<double>(physical_qubits) * duration.seconds();
}

double ec_overhead(double gate_prefactor, Duration round_budget,
                   Duration physical_syndrome_time) {
    if (!std::isfinite(gate_prefactor) || gate_prefactor <= 0.0) {
        throw std::domain_error("gate prefactor must be positive");
    }
    if (round_budget.is_zero()) {
        throw std::domain_error("round budget must be positive");
    }
    if (physical_syndrome_time.is_zero()) {
        throw std::domain_error("physical syndrome time must be positive");
    }
    return gate_prefactor *
           (round_budget.seconds() / physical_syndrome_time.seconds());
}

FactoryEstimate estimate_factory(const HardwareProfile& profile,
                                 int code_distance) {
    FactoryEstimate estimate;
    estimate.toffoli_time = toffoli_gate_time(profile, code_distance);
    estimate.physical_qubits = factory_footprint(code_distance);
    estimate.spacetime_volume =
        spacetime_volume(estimate.physical_qubits, estimate.toffoli_time);
    return estimate;
}

Duration quantum_primitive_time(std::int64_t toffoli_count,
                                Duration toffoli_time) {
    if (toffoli_count < 1) {
        throw std::domain_error("Toffoli count must be >= 1");
    }
    if (toffoli_time.is_zero()) {
        throw std::domain_error("Toffoli gate time must be positive");
    }
    return Duration::from_seconds(static_cast<double>(toffoli_count) *
                                  toffoli_time.seconds());
}

Duration classical_primitive_time(std::int64_t cycle_count, double clock_hz) {
    if (cycle_count < 1) {
        throw std::domain_error("cycle count must be >= 1");
    }
    if (!std::isfinite(clock_hz) || clock_hz <= 0.0) {
        throw std::domain_error("clock rate must be positive");
    }
    return Duration::from_seconds(static_cast<double>(cycle_count) / clock_hz);
}

const std::vector<HardwareProfile>& builtin_profiles() {
    static const std::vector<HardwareProfile> profiles = [] {
        std::vector<HardwareProfile> list;
        {
            HardwareProfile sc;
            sc.name = "superconducting-2020";
            sc.syndrome_cycle = Duration::from_microseconds(1);
            sc.decode_latency = Duration::from_seconds(0);
            sc.gate_prefactor = 5.5;
            sc.two_qubit_gate = Duration::from_nanoseconds(10);
            sc.measurement = Duration::from_nanoseconds(100);
            sc.physical_error_rate = 1e-3;
            sc.error_threshold = 1e-2;
            list.push_back(std::move(sc));
        }
        {
            HardwareProfile ion;
            ion.name = "ion-trap-networked";
            ion.syndrome_cycle = Duration::from_microseconds(100);
            ion.decode_latency = Duration::from_seconds(0);
            ion.gate_prefactor = 5.5;
            ion.two_qubit_gate = Duration::from_microseconds(100);
            ion.measurement = Duration::from_microseconds(10);
            ion.physical_error_rate = 1e-3;
            ion.error_threshold = 1e-2;
            list.push_back(std::move(ion));
        }
        for (const HardwareProfile& profile : list) {
            validate(profile);
        }
        return list;
    }();
    return profiles;
}

const HardwareProfile* find_profile(std::string_view name) {
    for (const HardwareProfile& profile : builtin_profiles()) {
        if (profile.name == name) {
            return &profile;
        }
    }
    return nullptr;
}

}  // namespace qcross
