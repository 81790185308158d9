#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jamesian {

/// Exact arbitrary-precision rational used by the exact backend.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace jamesian
