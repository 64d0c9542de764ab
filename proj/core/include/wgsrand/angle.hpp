#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wgsrand {

/// Parses an angle in radians. Accepts a plain decimal ("1.9635") or a
/// pi-multiple of the form [coeff]pi[/divisor]: "pi", "2pi", "5pi/8",
/// "0.5pi". Throws std::invalid_argument on anything else.
inline double parse_angle(const std::string& text) {
    const auto fail = [&]() -> double {
        throw std::invalid_argument("invalid angle '" + text + "'");
    };
    if (text.empty()) {
        return fail();
    }

    const std::size_t pi_pos = text.find("pi");
    const char* begin = text.c_str();
    char* end = nullptr;

    if (pi_pos == std::string::npos) {
        const double value = std::strtod(begin, &end);
        if (end != begin + text.size()) {
            return fail();
        }
        return value;
    }

    double coeff = 1.0;
    if (pi_pos > 0) {
        coeff = std::strtod(begin, &end);
        if (end != begin + pi_pos) {
            return fail();
        }
    }
    double divisor = 1.0;
    const std::size_t after = pi_pos + 2;
    if (after < text.size()) {
        if (text[after] != '/') {
            return fail();
        }
        const char* div_begin = begin + after + 1;
        divisor = std::strtod(div_begin, &end);
        if (end != begin + text.size() || divisor == 0.0) {
            return fail();
        }
    }
    return coeff * M_PI / divisor;
}

}  // namespace wgsrand
