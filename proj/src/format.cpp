#include "qcross/format.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>

#include "qcross/decimal.hpp"

namespace qcross {

namespace {

// Positional rendering of a 2-digit significand whose leading digit sits at
// the 10^exponent place: "880" (exp 2), "2.4" (exp 0), "0.088" (exp -2).
std::string render_positional(const std::string& digits, int exponent) {
    if (exponent >= 1) {
        std::string out = digits;
        out.append(static_cast<std::size_t>(exponent - 1), '0');
        return out;
    }
    if (exponent == 0) {
        std::string out;
        out.push_back(digits[0]);
        out.push_back('.');
        out.push_back(digits[1]);
        return out;
    }
    std::string out = "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += digits;
    return out;
}

struct Unit {
    double seconds;
    const char* singular;
    const char* plural;
};

// Largest first. A year is 365.25 days; a millennium is 1000 years.
constexpr std::array<Unit, 5> kLadder{{
    {31557600000.0, "millennium", "millennia"},
    {31557600.0, "year", "years"},
    {86400.0, "day", "days"},
    {3600.0, "hour", "hours"},
    {60.0, "minute", "minutes"},
}};

}  // namespace

std::string format_duration(Duration value) {
    if (value.is_zero()) {
        return "0 seconds";
    }
    const double seconds = value.seconds();
    const Unit* unit = nullptr;
    for (const Unit& candidate : kLadder) {
        if (seconds / candidate.seconds >= 1.0) {
            unit = &candidate;
            break;
        }
    }
    double mantissa = seconds;
    const char* singular = "second";
    const char* plural = "seconds";
    if (unit != nullptr) {
        mantissa = seconds / unit->seconds;
        singular = unit->singular;
        plural = unit->plural;
    }
    const SigDecimal sd = round_sig_decimal(mantissa, 2);
    const std::string text = render_positional(sd.digits, sd.exponent);
    const bool one = (text == "1.0");
    return text + " " + (one ? singular : plural);
}

std::string format_duration_si(Duration value) {
    if (value.is_zero()) {
        return "0 s";
    }
    // The unit is picked from the rounded decimal exponent, so a value that
    // rounds up across a power of ten ("165 us" -> "170 us") stays in the
    // unit of its rounded form.
    const SigDecimal sd = round_sig_decimal(value.seconds(), 2);
    struct SiUnit {
        int exponent;
        const char* suffix;
    };
    constexpr std::array<SiUnit, 4> units{{
        {0, "s"},
        {-3, "ms"},
        {-6, "us"},
        {-9, "ns"},
    }};
    const SiUnit* unit = &units.back();
    for (const SiUnit& candidate : units) {
        if (sd.exponent >= candidate.exponent) {
            unit = &candidate;
            break;
        }
    }
    return render_positional(sd.digits, sd.exponent - unit->exponent) + " " +
           unit->suffix;
}

std::string format_count(double value) {
    const SigDecimal sd = round_sig_decimal(value, 2);
    std::string out;
    out.push_back(sd.digits[0]);
    out.push_back('.');
    out.push_back(sd.digits[1]);
    out += "×10^";
    out += std::to_string(sd.exponent);
    return out;
}

std::string format_sig2(double value) {
    const SigDecimal sd = round_sig_decimal(value, 2);
    return render_positional(sd.digits, sd.exponent);
}

}  // namespace qcross
