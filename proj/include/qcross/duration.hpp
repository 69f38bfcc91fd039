#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qcross {

/// A span of physical time, stored in seconds.
///
/// This is the unit of every cost in the model: primitive call times,
/// error-corrected gate times, breakeven runtimes. Values are always finite
/// and non-negative; operations that need strict positivity say so.
class Duration {
public:
    constexpr Duration() = default;

    static Duration from_seconds(double value);
    static Duration from_milliseconds(double value);
    static Duration from_microseconds(double value);
    static Duration from_nanoseconds(double value);

    constexpr double seconds() const { return seconds_; }
    constexpr bool is_zero() const { return seconds_ == 0.0; }

    friend constexpr auto operator<=>(Duration, Duration) = default;

private:
    double seconds_ = 0.0;
};

/// Parses "<number><suffix>" with optional whitespace, where suffix is one of
/// ns, us, ms, s (case-sensitive, required). Throws std::invalid_argument on
/// malformed text and std::domain_error on negative or non-finite values.
Duration parse_duration(std::string_view text);

/// Canonical text form: shortest round-trip decimal in seconds, e.g. "0.44 s".
/// parse_duration(to_string(d)) == d exactly.
std::string to_string(Duration d);

}  // namespace qcross
