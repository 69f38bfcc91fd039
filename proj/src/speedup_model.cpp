#include "qcross/speedup_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcross {

namespace {

void require_finite_positive_calls(double calls) {
    if (!std::isfinite(calls) || calls <= 0.0) {
        throw std::domain_error("call count must be positive and finite");
    }
}

void require_positive(Duration d, const char* what) {
    if (d.is_zero()) {
        throw std::domain_error(std::string(what) + " must be positive");
    }
}

void require_speedup(double s, const char* what) {
    if (!std::isfinite(s) || s < 1.0) {
        throw std::domain_error(std::string(what) + " must be finite and >= 1");
    }
}

void validate(const SpeedupQuery& query) {
    require_positive(query.t_q, "t_q");
    require_positive(query.t_c, "t_c");
    require_speedup(query.rate_factor, "rate factor");
}

}  // namespace

SpeedupDegree::SpeedupDegree(double value) : value_(value) {
    if (!std::isfinite(value) || value <= 1.0) {
        throw std::domain_error("speedup degree must be finite and > 1");
    }
}

FixedSpeedup::FixedSpeedup(double factor) : factor_(factor) {
    require_speedup(factor, "fixed speedup");
}

AmdahlLaw::AmdahlLaw(double serial_fraction, std::int64_t processors)
    : serial_fraction_(serial_fraction), processors_(processors) {
    if (!std::isfinite(serial_fraction) || serial_fraction < 0.0 ||
        serial_fraction > 1.0) {
        throw std::domain_error("serial fraction must lie in [0, 1]");
    }
    if (processors < 1) {
        throw std::domain_error("processor count must be >= 1");
    }
}

GustafsonLaw::GustafsonLaw(double serial_fraction, std::int64_t processors)
    : serial_fraction_(serial_fraction), processors_(processors) {
    if (!std::isfinite(serial_fraction) || serial_fraction < 0.0 ||
        serial_fraction > 1.0) {
        throw std::domain_error("serial fraction must lie in [0, 1]");
    }
    if (processors < 1) {
        throw std::domain_error("processor count must be >= 1");
    }
}

Duration quantum_runtime(double calls, Duration t_q, double rate_factor) {
    require_finite_positive_calls(calls);
    require_positive(t_q, "t_q");
    require_speedup(rate_factor, "rate factor");
    const double seconds = calls * t_q.seconds() / rate_factor;
    if (!std::isfinite(seconds)) {
        throw std::range_error("quantum runtime overflows");
    }
    return Duration::from_seconds(seconds);
}

Duration classical_runtime(double calls, SpeedupDegree degree, Duration t_c,
                           double speedup) {
    require_finite_positive_calls(calls);
    require_positive(t_c, "t_c");
    require_speedup(speedup, "speedup");
    const double total_calls = std::pow(calls, degree.value());
    const double seconds = total_calls * t_c.seconds() / speedup;
    if (!std::isfinite(seconds)) {
        throw std::range_error("classical runtime overflows");
    }
    return Duration::from_seconds(seconds);
}

double resolve_speedup(const ParallelismConfig& config) {
    struct Visitor {
        double operator()(const FixedSpeedup& f) const { return f.factor(); }
        double operator()(const AmdahlLaw& a) const {
            const double p = static_cast<double>(a.processors());
            const double s =
                1.0 / (a.serial_fraction() + (1.0 - a.serial_fraction()) / p);
            return std::clamp(s, 1.0, p);
        }
        double operator()(const GustafsonLaw& g) const {
            const double p = static_cast<double>(g.processors());
            const double s =
                g.serial_fraction() + (1.0 - g.serial_fraction()) * p;
            return std::clamp(s, 1.0, p);
        }
    };
    return std::visit(Visitor{}, config);
}

double advantage_call_threshold(const SpeedupQuery& query) {
    validate(query);
    const double speedup = resolve_speedup(query.parallelism);
    const double ratio = query.t_q.seconds() * speedup /
                         (query.t_c.seconds() * query.rate_factor);
    if (!std::isfinite(ratio)) {
        throw std::range_error("cost ratio overflows");
    }
    const double calls = std::pow(ratio, 1.0 / (query.degree.value() - 1.0));
    if (!std::isfinite(calls) || calls <= 0.0) {
        throw std::range_error("breakeven call count overflows");
    }
    return calls;
}

BreakevenPoint breakeven(const SpeedupQuery& query) {
    const double calls = advantage_call_threshold(query);
    const double speedup = resolve_speedup(query.parallelism);
    BreakevenPoint point;
    point.calls = calls;
    point.runtime = quantum_runtime(calls, query.t_q, query.rate_factor);
    point.resolved_speedup = speedup;
    point.effective_t_q =
        Duration::from_seconds(query.t_q.seconds() / query.rate_factor);
    point.effective_t_c = Duration::from_seconds(query.t_c.seconds() / speedup);
    return point;
}

bool is_advantageous(double calls, const SpeedupQuery& query) {
    require_finite_positive_calls(calls);
    return calls > advantage_call_threshold(query);
}

}  // namespace qcross
