#include "qcross/duration.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace qcross;

TEST_CASE("from_seconds accepts the valid range") {
    CHECK(Duration::from_seconds(0.0).seconds() == 0.0);
    CHECK(Duration::from_seconds(1.5).seconds() == 1.5);
    CHECK(Duration{}.is_zero());
}

TEST_CASE("from_seconds rejects negative and non-finite values") {
    CHECK_THROWS_AS(Duration::from_seconds(-1.0), std::domain_error);
    CHECK_THROWS_AS(Duration::from_seconds(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(
        Duration::from_seconds(std::numeric_limits<double>::infinity()),
        std::domain_error);
}

TEST_CASE("unit factories scale by exact powers of ten") {
    CHECK(Duration::from_milliseconds(17).seconds() == 0.017);
    CHECK(Duration::from_microseconds(1).seconds() == 1e-6);
    // Division lands on the nearest double even when the reciprocal does not.
    CHECK(Duration::from_microseconds(100).seconds() == 1e-4);
    CHECK(Duration::from_nanoseconds(7).seconds() == 7e-9);
    CHECK(Duration::from_nanoseconds(33).seconds() == 33 / 1e9);
    CHECK_THROWS_AS(Duration::from_milliseconds(-1), std::domain_error);
}

TEST_CASE("parse_duration reads number plus unit suffix") {
    CHECK(parse_duration("17 ms") == Duration::from_milliseconds(17));
    CHECK(parse_duration("17ms") == Duration::from_milliseconds(17));
    CHECK(parse_duration("  440 ms ") == Duration::from_milliseconds(440));
    CHECK(parse_duration("33 ns") == Duration::from_nanoseconds(33));
    CHECK(parse_duration("165 us") == Duration::from_microseconds(165));
    CHECK(parse_duration("2.5 s") == Duration::from_seconds(2.5));
    CHECK(parse_duration("3.3e-08 s") == Duration::from_seconds(3.3e-8));
    CHECK(parse_duration("0 s").is_zero());
}

TEST_CASE("parse_duration rejects malformed text") {
    CHECK_THROWS_AS(parse_duration(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("17"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("ms"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("17 MS"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("17 m"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("17 msx"), std::invalid_argument);
    CHECK_THROWS_AS(parse_duration("17 s extra"), std::invalid_argument);
}

TEST_CASE("parse_duration rejects out-of-domain magnitudes") {
    CHECK_THROWS_AS(parse_duration("-5 ms"), std::domain_error);
    CHECK_THROWS_AS(parse_duration("1e400 s"), std::domain_error);
    CHECK_THROWS_AS(parse_duration("inf s"), std::domain_error);
}

TEST_CASE("to_string round-trips exactly") {
    CHECK(to_string(Duration::from_seconds(0.44)) == "0.44 s");
    CHECK(parse_duration(to_string(Duration::from_seconds(0.017))) ==
          Duration::from_seconds(0.017));

    // Property: any representable duration survives the text round trip
    // bit-exactly.
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> mantissa(0.0, 10.0);
    std::uniform_int_distribution<int> exponent(-12, 12);
    for (int i = 0; i < 500; ++i) {
        const double value =
            mantissa(rng) * std::pow(10.0, exponent(rng));
        const Duration d = Duration::from_seconds(value);
        CAPTURE(value);
        CHECK(parse_duration(to_string(d)) == d);
    }
}

TEST_CASE("durations order by magnitude") {
    CHECK(Duration::from_nanoseconds(33) < Duration::from_milliseconds(17));
    CHECK(Duration::from_seconds(2) > Duration::from_seconds(1));
    CHECK(Duration::from_seconds(1) == Duration::from_seconds(1));
}
