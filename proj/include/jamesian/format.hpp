#pragma once

#include <cstdio>
#include <string>

namespace jamesian {

/// printf-style %.{digits}g rendering; 12 significant digits by default.
inline std::string format_number(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace jamesian
