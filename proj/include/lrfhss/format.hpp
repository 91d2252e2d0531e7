#pragma once

#include <cstdio>
#include <string>

namespace lrfhss {

/// Fixed-point formatting with up to six decimal places, trailing zeros
/// trimmed. All CSV and text surfaces go through this one function so a
/// rerun with identical inputs produces byte-identical output.
inline std::string format_number(double value) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s(buf);
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        auto last = s.find_last_not_of('0');
        if (last == dot) {
            last -= 1;
        }
        s.erase(last + 1);
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

}  // namespace lrfhss
