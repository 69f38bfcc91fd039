#pragma once

#include <string>

namespace qcross {

/// Shortest decimal string that round-trips to exactly `value` (std::to_chars
/// general format). Used wherever output must survive a parse round-trip.
std::string to_shortest_string(double value);

/// A positive value rounded to a fixed number of significant decimal digits,
/// kept in decimal form so no binary re-rounding can disturb it.
///
/// value ~= 0.<digits> * 10^(exponent + 1); equivalently the leading digit
/// sits at the 10^exponent place. "52" with exponent 5 is 5.2e5.
struct SigDecimal {
    std::string digits;  // exactly the requested digit count, no sign, no dot
    int exponent;
};

/// Rounds `value` to `digits` significant figures. Rounding is
/// half-away-from-zero applied to the shortest round-trip decimal form of
/// `value`, so results are identical on every IEEE-754 platform and values
/// that print as decimal ties (e.g. 0.000165) round up.
/// Requires value > 0 and finite, digits >= 1.
SigDecimal round_sig_decimal(double value, int digits);

/// round_sig_decimal converted back to the nearest double.
double round_sig(double value, int digits);

}  // namespace qcross
