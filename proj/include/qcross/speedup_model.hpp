#pragma once

#include <cstdint>
#include <variant>

#include "qcross/duration.hpp"

namespace qcross {

/// Polynomial order d of the quantum query advantage: a problem the quantum
/// machine solves in M primitive calls costs the classical machine M^d calls.
/// Must be finite and > 1; the breakeven exponent 1/(d-1) is singular at 1.
class SpeedupDegree {
public:
    explicit SpeedupDegree(double value);
    double value() const { return value_; }
    friend bool operator==(SpeedupDegree, SpeedupDegree) = default;

private:
    double value_;
};

/// A flat classical parallel speedup S >= 1, applied as-is.
class FixedSpeedup {
public:
    explicit FixedSpeedup(double factor);
    double factor() const { return factor_; }
    friend bool operator==(FixedSpeedup, FixedSpeedup) = default;

private:
    double factor_;
};

/// Amdahl's law for a fixed-size workload: S = 1 / (alpha + (1-alpha)/P)
/// with serial fraction alpha in [0, 1] on P >= 1 processors.
class AmdahlLaw {
public:
    AmdahlLaw(double serial_fraction, std::int64_t processors);
    double serial_fraction() const { return serial_fraction_; }
    std::int64_t processors() const { return processors_; }
    friend bool operator==(AmdahlLaw, AmdahlLaw) = default;

private:
    double serial_fraction_;
    std::int64_t processors_;
};

/// Gustafson's law for a workload scaled to the machine:
/// S = alpha + (1-alpha) * P.
class GustafsonLaw {
public:
    GustafsonLaw(double serial_fraction, std::int64_t processors);
    double serial_fraction() const { return serial_fraction_; }
    std::int64_t processors() const { return processors_; }
    friend bool operator==(GustafsonLaw, GustafsonLaw) = default;

private:
    double serial_fraction_;
    std::int64_t processors_;
};

using ParallelismConfig = std::variant<FixedSpeedup, AmdahlLaw, GustafsonLaw>;

/// Full input to a breakeven computation.
struct SpeedupQuery {
    Duration t_q;  // quantum primitive call time, > 0
    Duration t_c;  // classical primitive call time, > 0
    SpeedupDegree degree{2.0};
    ParallelismConfig parallelism = FixedSpeedup{1.0};
    double rate_factor = 1.0;  // R >= 1, Toffoli distillation rate speedup
};

/// Where the quantum and classical runtime curves cross.
struct BreakevenPoint {
    double calls = 0.0;             // M*: quantum is faster beyond this
    Duration runtime;               // T*: wall time both sides take at M*
    double resolved_speedup = 1.0;  // S actually applied
    Duration effective_t_q;         // t_q / R
    Duration effective_t_c;         // t_c / S
};

/// T_Q = calls * t_q / rate_factor. Requires calls > 0, t_q > 0,
/// rate_factor >= 1; throws std::range_error if the result overflows.
Duration quantum_runtime(double calls, Duration t_q, double rate_factor = 1.0);

/// T_C = calls^degree * t_c / speedup. Requires calls > 0, t_c > 0,
/// speedup >= 1; throws std::range_error if the result overflows.
Duration classical_runtime(double calls, SpeedupDegree degree, Duration t_c,
                           double speedup = 1.0);

/// The scalar speedup a configuration yields. Law results are clamped into
/// [1, P]: parallelism never slows the classical side down and never beats
/// the processor count.
double resolve_speedup(const ParallelismConfig& config);

/// M* = (t_q * S / (t_c * R))^(1/(d-1)). Throws std::domain_error on invalid
/// query fields, std::range_error on overflow.
double advantage_call_threshold(const SpeedupQuery& query);

/// M*, the runtime at M*, and the effective per-call costs.
BreakevenPoint breakeven(const SpeedupQuery& query);

/// True iff the quantum side is strictly faster at this call count, i.e.
/// calls > M*. Exactly at M* the sides tie and this is false.
bool is_advantageous(double calls, const SpeedupQuery& query);

}  // namespace qcross
