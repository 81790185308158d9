#pragma once

// Closed-form pieces of the Salzmann transfer with the piecewise identity
// homeomorphism. Where a, b in I = [eps, 1-eps] and the result stays in
// I' = [eps - 1/2, 1/2 - eps], J(a,b) = (a - 1/2) * (1/2 - b) + 1/2 is affine:
//
//   A1: (a-1/2)/(1/2-b) in (-inf,-3/2] u [1,inf),  a - b/2 - 1/4 in I'  ->  a - b/2 + 1/4
//   A2: (a-1/2)/(1/2-b) in [-2/3, 1],              a/2 - b + 1/4 in I'  ->  a/2 - b + 3/4
//   A3: (a-1/2)/(1/2-b) in [-3/2, -2/3],           2a - 2b in I'        ->  2a - 2b + 1/2
//
// On the line b = 1/2 the ratio is undefined and J(a, 1/2) = a.

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "format.hpp"
#include "homeo.hpp"
#include "jamesian.hpp"
#include "loop_core.hpp"
#include "salzmann.hpp"
#include "sampling.hpp"

namespace jamesian {

class ExplicitRegionSpec {
public:
    explicit ExplicitRegionSpec(double eps = 0.1) : eps_(eps) {
        if (!(eps > 0.0 && eps < 0.5)) throw InputError("region epsilon must lie in (0, 1/2)");
    }

    double eps() const { return eps_; }
    /// I = [eps, 1 - eps]
    bool in_interval(double x) const { return x >= eps_ && x <= 1.0 - eps_; }
    /// I' = [eps - 1/2, 1/2 - eps], the image of I under x -> x - 1/2.
    bool in_shifted_interval(double y) const { return y >= eps_ - 0.5 && y <= 0.5 - eps_; }

private:
    double eps_;
};

enum class RegionLabel { A1, A2, A3, Outside, BHalf };

inline const char* to_string(RegionLabel l) {
    switch (l) {
        case RegionLabel::A1: return "A1";
        case RegionLabel::A2: return "A2";
        case RegionLabel::A3: return "A3";
        case RegionLabel::Outside: return "OUTSIDE";
        case RegionLabel::BHalf: return "B_HALF";
    }
    return "?";
}

/// Label of (a, b); shared ratio boundaries resolve A1 > A2 > A3.
inline RegionLabel classify(double a, double b, const ExplicitRegionSpec& spec) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
        throw DomainError("classify: (" + format_number(a) + ", " + format_number(b) + ") outside the open square");
    if (b == 0.5) return RegionLabel::BHalf;
    if (!spec.in_interval(a) || !spec.in_interval(b)) return RegionLabel::Outside;
    const double x = a - 0.5;
    const double t = 0.5 - b;
    const double ratio = x / t;
    if (ratio_in_case(SalzmannCase::Outer, ratio) && spec.in_shifted_interval(a - b / 2 - 0.25))
        return RegionLabel::A1;
    if (ratio_in_case(SalzmannCase::Middle, ratio) && spec.in_shifted_interval(a / 2 - b + 0.25))
        return RegionLabel::A2;
    if (ratio_in_case(SalzmannCase::Steep, ratio) && spec.in_shifted_interval(2 * a - 2 * b))
        return RegionLabel::A3;
    return RegionLabel::Outside;
}

/// Affine formula of a labelled region (B_HALF gives a).
inline double region_formula(RegionLabel label, double a, double b) {
    switch (label) {
        case RegionLabel::A1: return a - b / 2 + 0.25;
        case RegionLabel::A2: return a / 2 - b + 0.75;
        case RegionLabel::A3: return 2 * a - 2 * b + 0.5;
        case RegionLabel::BHalf: return a;
        case RegionLabel::Outside: break;
    }
    throw OutOfRegionError("no closed form outside the explicit region");
}

/// Closed-form J on the explicit region; OutOfRegionError elsewhere, where the
/// generic transfer evaluator must be used instead.
inline double explicit_eval(double a, double b, const ExplicitRegionSpec& spec) {
    const auto label = classify(a, b, spec);
    if (label == RegionLabel::Outside)
        throw OutOfRegionError("(" + format_number(a) + ", " + format_number(b) +
                               ") is outside the explicit region; use the transfer evaluator");
    return region_formula(label, a, b);
}

/// The generic evaluator the closed forms must agree with.
inline JamesianFunction salzmann_transfer(double eps) { return from_loop_transfer(salzmann_loop(), piecewise_identity(eps)); }

/// Compares explicit_eval with the transfer evaluator at the pinned points and
/// at `samples` seeded uniform points that land in the explicit region.
inline CheckReport cross_validate(const ExplicitRegionSpec& spec, std::size_t samples, std::uint64_t seed,
                                  const std::vector<std::pair<double, double>>& pinned = {}, double tol = 1e-12) {
    const auto J = salzmann_transfer(spec.eps());
    detail::ResidualTracker tr("explicit_vs_transfer");
    auto compare = [&](double a, double b) {
        tr.add(std::abs(explicit_eval(a, b, spec) - J(a, b)), {a, b});
    };
    for (const auto& [a, b] : pinned) compare(a, b);
    Rng rng(seed);
    std::size_t accepted = 0;
    const std::size_t max_draws = 1000 * (samples + 1);
    for (std::size_t draws = 0; accepted < samples && draws < max_draws; ++draws) {
        const double a = uniform_open(rng);
        const double b = uniform_open(rng);
        if (classify(a, b, spec) == RegionLabel::Outside) continue;
        compare(a, b);
        ++accepted;
    }
    auto report = tr.finish(tol);
    report.seed = seed;
    if (accepted < samples) report.passed = false;
    return report;
}

struct RegionCell {
    double a = 0.0;
    double b = 0.0;
    RegionLabel label = RegionLabel::Outside;
};

/// Labels at the interior lattice points (i/(n+1), j/(n+1)), a-major order.
inline std::vector<RegionCell> region_grid(const ExplicitRegionSpec& spec, int resolution) {
    if (resolution < 2) throw InputError("region grid resolution must be at least 2");
    const auto pts = interior_lattice(resolution);
    std::vector<RegionCell> cells;
    cells.reserve(pts.size() * pts.size());
    for (double a : pts)
        for (double b : pts) cells.push_back({a, b, classify(a, b, spec)});
    return cells;
}

}  // namespace jamesian
