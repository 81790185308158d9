#pragma once

// Strictly increasing homeomorphisms f : (0,1) -> R with f(1-x) = -f(x),
// used to transfer loops on R to loops on (0,1).

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "error.hpp"
#include "format.hpp"
#include "loop_core.hpp"

namespace jamesian {

using MonotoneFn = std::function<double(double)>;

/// Solve forward(x) = y for x in (0,1) by bisection.
///
/// The search runs in logit coordinates u = log(x/(1-x)): the bracket starts
/// at [-1, 1] and doubles its half-width until it encloses y, then bisects
/// until |forward(x) - y| <= tolerance * max(1, |y|). Fully deterministic.
/// Throws NumericError when the bracket hits the ends of (0,1) in double
/// precision without enclosing y (forward not surjective).
inline double invert_by_bisection(const MonotoneFn& forward, double y, double tolerance) {
    if (!(tolerance > 0.0)) throw InputError("bisection tolerance must be positive");
    if (!std::isfinite(y)) throw DomainError("bisection target must be finite");
    const double goal = tolerance * std::max(1.0, std::abs(y));
    auto to_unit = [](double u) { return 1.0 / (1.0 + std::exp(-u)); };
    auto value_at = [&](double u) -> std::optional<double> {
        const double x = to_unit(u);
        if (!(x > 0.0 && x < 1.0)) return std::nullopt;
        return forward(x);
    };

    double lo = -1.0;
    double hi = 1.0;
    for (int i = 0;; ++i) {
        const auto flo = value_at(lo);
        const auto fhi = value_at(hi);
        if (!flo || !fhi)
            throw NumericError("bisection bracket exhausted for y = " + std::to_string(y) +
                               " (forward map not surjective onto R?)");
        if (*flo <= y && y <= *fhi) break;
        if (*flo > y) lo *= 2.0;
        if (*fhi < y) hi *= 2.0;
        if (i > 200) throw NumericError("bisection bracket expansion did not terminate");
    }

    double best_x = to_unit(0.5 * (lo + hi));
    double best_err = std::abs(forward(best_x) - y);
    for (int iter = 0; iter < 400 && best_err > goal; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) break;
        const double x = to_unit(mid);
        const double fx = forward(x);
        const double err = std::abs(fx - y);
        if (err < best_err) {
            best_err = err;
            best_x = x;
        }
        if (fx < y)
            lo = mid;
        else
            hi = mid;
    }
    if (best_err > goal)
        throw NumericError("bisection did not reach tolerance for y = " + std::to_string(y));
    return best_x;
}

enum class HomeoKind { Logit, ScaledLogit, PiecewiseIdentity, Custom };
enum class InversionMode { ClosedForm, Bisection };

class OddHomeomorphism {
public:
    double forward(double x) const {
        if (!(x > 0.0 && x < 1.0))
            throw DomainError(name_ + ": forward argument " + std::to_string(x) + " outside (0,1)");
        return forward_(x);
    }
    double inverse(double y) const {
        if (!std::isfinite(y)) throw DomainError(name_ + ": inverse argument is not finite");
        return inverse_(y);
    }
    double operator()(double x) const { return forward(x); }

    HomeoKind kind() const { return kind_; }
    /// k for ScaledLogit, epsilon for PiecewiseIdentity, 0 otherwise.
    double parameter() const { return parameter_; }
    InversionMode inversion() const { return inversion_; }
    double inversion_tolerance() const { return inversion_tolerance_; }
    const std::string& name() const { return name_; }

    friend OddHomeomorphism logit();
    friend OddHomeomorphism scaled_logit(double k);
    friend OddHomeomorphism piecewise_identity(double eps);
    friend OddHomeomorphism from_forward(std::string name, MonotoneFn forward, double tolerance);

private:
    OddHomeomorphism(std::string name, HomeoKind kind, double parameter, MonotoneFn fwd, MonotoneFn inv,
                     InversionMode mode, double tol)
        : name_(std::move(name)),
          kind_(kind),
          parameter_(parameter),
          forward_(std::move(fwd)),
          inverse_(std::move(inv)),
          inversion_(mode),
          inversion_tolerance_(tol) {}

    std::string name_;
    HomeoKind kind_;
    double parameter_;
    MonotoneFn forward_;
    MonotoneFn inverse_;
    InversionMode inversion_;
    double inversion_tolerance_;
};

namespace detail {

inline double logit_fwd(double x) { return std::log(x) - std::log1p(-x); }

// Written per sign so neither branch overflows and f^-1(-y) = 1 - f^-1(y)
// up to rounding.
inline double logistic(double y) {
    if (y >= 0.0) return 1.0 / (1.0 + std::exp(-y));
    const double e = std::exp(y);
    return e / (1.0 + e);
}

}  // namespace detail

/// f(x) = log(x/(1-x)), inverse y -> e^y/(1+e^y).
inline OddHomeomorphism logit() {
    return OddHomeomorphism("logit", HomeoKind::Logit, 0.0, detail::logit_fwd, detail::logistic,
                            InversionMode::ClosedForm, 0.0);
}

/// f(x) = k log(x/(1-x)), k > 0.
inline OddHomeomorphism scaled_logit(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw InputError("scaled_logit: k must be positive and finite");
    return OddHomeomorphism(
        "scaled-logit:" + format_number(k), HomeoKind::ScaledLogit, k,
        [k](double x) { return k * detail::logit_fwd(x); }, [k](double y) { return detail::logistic(y / k); },
        InversionMode::ClosedForm, 0.0);
}

/// Identity shifted by 1/2 on [eps, 1-eps] with logarithmic tails:
///   f(x) = x - 1/2                   on [eps, 1-eps]
///   f(x) = (eps - 1/2) + log(x/eps)  on (0, eps)
///   f(x) = -f(1-x)                   on (1-eps, 1)
/// Continuous at the knots, strictly increasing and onto R.
inline OddHomeomorphism piecewise_identity(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw InputError("piecewise_identity: epsilon must lie in (0, 1/2)");
    const double knot = eps - 0.5;
    auto tail = [eps, knot](double x) { return knot + std::log(x / eps); };
    auto tail_inv = [eps, knot](double y) { return eps * std::exp(y - knot); };
    auto fwd = [eps, tail](double x) {
        if (x < eps) return tail(x);
        if (x > 1.0 - eps) return -tail(1.0 - x);
        return x - 0.5;
    };
    auto inv = [knot, tail_inv](double y) {
        if (y < knot) return tail_inv(y);
        if (y > -knot) return 1.0 - tail_inv(-y);
        return y + 0.5;
    };
    return OddHomeomorphism("piecewise:" + format_number(eps), HomeoKind::PiecewiseIdentity, eps, fwd, inv,
                            InversionMode::ClosedForm, 0.0);
}

/// Wraps a user-supplied forward map; the inverse is computed by bisection.
inline OddHomeomorphism from_forward(std::string name, MonotoneFn forward, double tolerance = 1e-13) {
    if (!(tolerance > 0.0)) throw InputError("from_forward: tolerance must be positive");
    MonotoneFn inv = [forward, tolerance](double y) { return invert_by_bisection(forward, y, tolerance); };
    return OddHomeomorphism(std::move(name), HomeoKind::Custom, 0.0, std::move(forward), std::move(inv),
                            InversionMode::Bisection, tolerance);
}

/// residual = max |f(1-x) + f(x)| over the grid.
inline CheckReport check_odd_symmetry(const OddHomeomorphism& f, std::span<const double> grid, double tol = 1e-12) {
    detail::ResidualTracker tr("odd_symmetry");
    for (double x : grid) {
        if (!(x > 0.0 && x < 1.0)) throw DomainError("check_odd_symmetry: grid point outside (0,1)");
        tr.add(std::abs(f.forward(1.0 - x) + f.forward(x)), {x});
    }
    return tr.finish(tol);
}

/// residual = max(|f^-1(f(x)) - x|) over the grid.
inline CheckReport check_round_trip(const OddHomeomorphism& f, std::span<const double> grid, double tol = 1e-9) {
    detail::ResidualTracker tr("round_trip");
    for (double x : grid) tr.add(std::abs(f.inverse(f.forward(x)) - x), {x});
    return tr.finish(tol);
}

/// Strict increase of f along an increasing grid; residual is the negated
/// smallest gap.
inline CheckReport check_increasing(const OddHomeomorphism& f, std::span<const double> grid) {
    detail::ResidualTracker tr("increasing");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) throw InputError("check_increasing: grid not strictly increasing");
        tr.add(-(f.forward(grid[i]) - f.forward(grid[i - 1])), {grid[i - 1], grid[i]});
    }
    return tr.finish(0.0, /*strict=*/true);
}

}  // namespace jamesian
