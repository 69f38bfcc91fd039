#include "qcross/duration.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qcross/decimal.hpp"

namespace qcross {

namespace {

Duration checked(double seconds, const char* what) {
    if (!std::isfinite(seconds)) {
        throw std::domain_error(std::string(what) + ": duration must be finite");
    }
    if (seconds < 0.0) {
        throw std::domain_error(std::string(what) +
                                ": duration must be non-negative");
    }
    return Duration::from_seconds(seconds);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Duration Duration::from_seconds(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::domain_error("duration must be finite and non-negative");
    }
    Duration d;
    d.seconds_ = value;
    return d;
}

// Dividing by the exactly-representable power of ten gives the correctly
// rounded result; multiplying by the rounded reciprocal would not (e.g.
// 100 us would miss 1e-4 by one ulp).
Duration Duration::from_milliseconds(double value) {
    return checked(value / 1e3, "from_milliseconds");
}

Duration Duration::from_microseconds(double value) {
    return checked(value / 1e6, "from_microseconds");
}

Duration Duration::from_nanoseconds(double value) {
    return checked(value / 1e9, "from_nanoseconds");
}

Duration parse_duration(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty()) {
        throw std::invalid_argument("empty duration");
    }
    double magnitude = 0.0;
    const char* first = body.data();
    const char* last = body.data() + body.size();
    auto [next, ec] = std::from_chars(first, last, magnitude);
    if (ec == std::errc::result_out_of_range) {
        // Well-formed number, unusable value: a domain problem, not a
        // syntax one.
        throw std::domain_error("duration '" + std::string(text) +
                                "' must be finite");
    }
    if (ec != std::errc() || next == first) {
        throw std::invalid_argument("malformed duration '" + std::string(text) +
                                    "': expected <number> <ns|us|ms|s>");
    }
    std::string_view suffix = trim(std::string_view(next, last - next));
    // Divisors, so parsed values land on the same doubles as the factories.
    double divisor = 0.0;
    if (suffix == "s") {
        divisor = 1.0;
    } else if (suffix == "ms") {
        divisor = 1e3;
    } else if (suffix == "us") {
        divisor = 1e6;
    } else if (suffix == "ns") {
        divisor = 1e9;
    } else {
        throw std::invalid_argument("malformed duration '" + std::string(text) +
                                    "': unit must be one of ns, us, ms, s");
    }
    if (!std::isfinite(magnitude)) {
        throw std::domain_error("duration '" + std::string(text) +
                                "' must be finite");
    }
    if (magnitude < 0.0) {
        throw std::domain_error("duration '" + std::string(text) +
                                "' must be non-negative");
    }
    return Duration::from_seconds(magnitude / divisor);
}

std::string to_string(Duration d) {
    return to_shortest_string(d.seconds()) + " s";
}

}  // namespace qcross
