#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace jamesian {

using Rng = std::mt19937_64;

/// Uniform draw from the open interval (0,1) built from the raw 64-bit stream,
/// so sequences are identical across standard library implementations.
inline double uniform_open(Rng& rng) {
    for (;;) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

inline double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform_open(rng); }

/// Interior lattice {i/(n+1) : i = 1..n}.
inline std::vector<double> interior_lattice(int n) {
    std::vector<double> pts;
    pts.reserve(n > 0 ? static_cast<std::size_t>(n) : 0);
    for (int i = 1; i <= n; ++i) pts.push_back(static_cast<double>(i) / static_cast<double>(n + 1));
    return pts;
}

using Triple = std::array<double, 3>;

/// Seeded random triples in (0,1)^3 plus caller-pinned triples evaluated first.
struct TripleSampling {
    std::size_t random_count = 10000;
    std::uint64_t seed = 0;
    std::vector<Triple> pinned;
};

}  // namespace jamesian
