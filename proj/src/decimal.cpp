#include "qcross/decimal.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace qcross {

std::string to_shortest_string(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::range_error("value not representable as decimal text");
    }
    return std::string(buf, end);
}

SigDecimal round_sig_decimal(double value, int digits) {
    if (digits < 1) {
        throw std::domain_error("significant digit count must be >= 1");
    }
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::domain_error("rounded value must be positive and finite");
    }

    // Decompose the shortest round-trip decimal into a digit string and the
    // power of ten of its leading digit.
    const std::string text = to_shortest_string(value);
    std::string_view rest = text;
    int exp10 = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view tail = rest.substr(e + 1);
        if (!tail.empty() && tail.front() == '+') {
            // from_chars rejects an explicit plus sign.
            tail.remove_prefix(1);
        }
        std::from_chars(tail.data(), tail.data() + tail.size(), exp10);
        rest = rest.substr(0, e);
    }
    std::string all;
    int point = 0;  // digits before the decimal point
    bool seen_point = false;
    for (char c : rest) {
        if (c == '.') {
            seen_point = true;
        } else {
            all.push_back(c);
            if (!seen_point) ++point;
        }
    }
    int exponent = point - 1 + exp10;
    std::size_t lead = 0;
    while (lead < all.size() && all[lead] == '0') {
        ++lead;
        --exponent;
    }
    all.erase(0, lead);

    const std::size_t n = static_cast<std::size_t>(digits);
    std::string kept = all.substr(0, n);
    // Half-away-from-zero on the decimal form: a first dropped digit of 5
    // rounds up even when nothing follows it.
    if (all.size() > n && all[n] >= '5') {
        int i = static_cast<int>(n) - 1;
        for (; i >= 0; --i) {
            if (kept[static_cast<std::size_t>(i)] == '9') {
                kept[static_cast<std::size_t>(i)] = '0';
            } else {
                ++kept[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i < 0) {
            kept.insert(kept.begin(), '1');
            kept.pop_back();
            ++exponent;
        }
    }
    kept.append(n - kept.size(), '0');
    return SigDecimal{std::move(kept), exponent};
}

double round_sig(double value, int digits) {
    const SigDecimal sd = round_sig_decimal(value, digits);
    const std::string text = "0." + sd.digits + "e" + std::to_string(sd.exponent + 1);
    double result = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), result);
    return result;
}

}  // namespace qcross
