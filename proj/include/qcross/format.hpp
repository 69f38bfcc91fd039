#pragma once

#include <string>

#include "qcross/duration.hpp"

namespace qcross {

/// Human-readable duration at 2 significant figures with an automatic unit:
/// seconds, minutes, hours, days, years (365.25 days), millennia. The
/// largest unit in which the magnitude is at least 1 wins; anything under a
/// minute stays in seconds. Mantissas >= 10 print as integers ("320 days"),
/// mantissas < 10 with one decimal ("2.4 hours"). Units pluralize unless the
/// rounded mantissa is exactly 1.0 ("1.0 day"). Zero prints "0 seconds".
std::string format_duration(Duration value);

/// Engineering display for sub-second times: largest of s/ms/us/ns in which
/// the 2-sig-fig value is at least 1, e.g. "170 us", "17 ms". The unit is
/// chosen from the rounded decimal, not from a re-divided double, so values
/// sitting on decimal ties keep their rounded-up unit.
std::string format_duration_si(Duration value);

/// Dimensionless count at 2 significant figures in scientific notation:
/// "5.2×10^5". Requires a positive finite value.
std::string format_count(double value);

/// Plain positional decimal at 2 significant figures: "880", "2.4", "0.088".
std::string format_sig2(double value);

}  // namespace qcross
