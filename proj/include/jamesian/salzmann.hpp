#pragma once

// Salzmann's commutative proper loop on R with the inverse property.
//
//   x * t = x + t/2     if x/t in (-inf, -3/2] u [1, inf)     OUTER
//         = x/2 + t     if x/t in [-2/3, 1]                   MIDDLE
//         = 2x + 2t     if x/t in [-3/2, -2/3]                STEEP
//         = x           if t = 0                              T_ZERO
//
// Unit 0, inverse x -> -x, translations strictly increasing, and
// x^2 * x^2 = 9x/4 != 5x/2 = x^3 * x for every x != 0.

#include <cmath>
#include <string>

#include "error.hpp"
#include "loop_core.hpp"
#include "rational.hpp"

namespace jamesian {

enum class SalzmannCase { Outer, Middle, Steep, TZero };

inline const char* to_string(SalzmannCase c) {
    switch (c) {
        case SalzmannCase::Outer: return "OUTER";
        case SalzmannCase::Middle: return "MIDDLE";
        case SalzmannCase::Steep: return "STEEP";
        case SalzmannCase::TZero: return "T_ZERO";
    }
    return "?";
}

/// True iff the ratio x/t satisfies the membership condition of case c
/// (closed intervals, so boundary ratios belong to both neighbours).
template <class T>
bool ratio_in_case(SalzmannCase c, const T& ratio) {
    const T lo_steep = T(-3) / 2;
    const T hi_steep = T(-2) / 3;
    switch (c) {
        case SalzmannCase::Outer: return ratio <= lo_steep || ratio >= T(1);
        case SalzmannCase::Middle: return ratio >= hi_steep && ratio <= T(1);
        case SalzmannCase::Steep: return ratio >= lo_steep && ratio <= hi_steep;
        case SalzmannCase::TZero: return false;
    }
    return false;
}

/// Matched case. Boundary ratios 1 and -3/2 resolve to OUTER, -2/3 to MIDDLE;
/// the adjacent formulas agree there. x = 0, t != 0 has ratio 0 and is MIDDLE.
template <class T>
SalzmannCase classify_case(const T& x, const T& t) {
    if (t == T(0)) return SalzmannCase::TZero;
    const T r = x / t;
    if (r <= T(-3) / 2 || r >= T(1)) return SalzmannCase::Outer;
    if (r >= T(-2) / 3) return SalzmannCase::Middle;
    return SalzmannCase::Steep;
}

/// Affine rule of case c, applied regardless of whether (x, t) belongs to it.
template <class T>
T salzmann_formula(SalzmannCase c, const T& x, const T& t) {
    switch (c) {
        case SalzmannCase::Outer: return T(x + t / 2);
        case SalzmannCase::Middle: return T(x / 2 + t);
        case SalzmannCase::Steep: return T(2 * x + 2 * t);
        case SalzmannCase::TZero: return x;
    }
    return x;
}

template <class T>
T salzmann_apply(const T& x, const T& t) {
    return salzmann_formula(classify_case(x, t), x, t);
}

inline double salzmann_mul(double x, double t) {
    if (!std::isfinite(x) || !std::isfinite(t))
        throw DomainError("salzmann_mul: non-finite argument (" + std::to_string(x) + ", " + std::to_string(t) + ")");
    return salzmann_apply(x, t);
}

inline Rational salzmann_mul_exact(const Rational& x, const Rational& t) { return salzmann_apply(x, t); }

/// The Salzmann loop as a RealLoop (unit 0, inverse negation).
template <class T = double>
RealLoop<T> salzmann_loop() {
    if constexpr (std::is_floating_point_v<T>) {
        return RealLoop<T>(
            "salzmann", [](const T& x, const T& t) { return T(salzmann_mul(x, t)); }, T(0),
            [](const T& x) { return T(-x); }, Carrier::RealLine, Backend::Float);
    } else {
        return RealLoop<T>(
            "salzmann", [](const T& x, const T& t) { return salzmann_apply(x, t); }, T(0),
            [](const T& x) { return T(-x); }, Carrier::RealLine, Backend::ExactRational);
    }
}

}  // namespace jamesian
