#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace netrobust::detail {

/// 12 significant digits, shortest general form, '.' separator regardless of locale.
inline std::string formatReal(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (value == 0.0)
        return "0"; // folds -0 into 0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, ptr);
}

} // namespace netrobust::detail
