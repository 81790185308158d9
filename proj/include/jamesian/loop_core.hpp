#pragma once

// Binary operations on R or on (0,1) with a unit and two-sided inverses
// (loops), and numerical checkers for the loop axioms, the inverse property,
// commutativity, monotone translations and failures of associativity.
//
// Every checker is a pure function of its inputs. The value type T is either
// double or an exact rational type (boost::multiprecision::cpp_rational);
// residuals are always reported as double.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "sampling.hpp"

namespace jamesian {

enum class Carrier { RealLine, UnitInterval };
enum class Backend { Float, ExactRational };

inline const char* to_string(Carrier c) { return c == Carrier::RealLine ? "R" : "(0,1)"; }

template <class T>
double to_double(const T& x) {
    return static_cast<double>(x);
}

/// Default residual tolerance: 1e-9 for floating point, exact for rationals.
inline double default_tolerance(Backend b) { return b == Backend::Float ? 1e-9 : 0.0; }

/// An immutable loop (op, unit, inverse) on a carrier.
template <class T>
class RealLoop {
public:
    using value_type = T;
    using BinaryOp = std::function<T(const T&, const T&)>;
    using UnaryOp = std::function<T(const T&)>;

    RealLoop(std::string name, BinaryOp op, T unit, UnaryOp inv, Carrier carrier, Backend backend)
        : name_(std::move(name)),
          op_(std::move(op)),
          unit_(std::move(unit)),
          inv_(std::move(inv)),
          carrier_(carrier),
          backend_(backend) {}

    T operator()(const T& x, const T& y) const { return op_(x, y); }
    T inv(const T& x) const { return inv_(x); }
    const T& unit() const { return unit_; }
    Carrier carrier() const { return carrier_; }
    Backend backend() const { return backend_; }
    const std::string& name() const { return name_; }

    bool contains(const T& x) const {
        if constexpr (std::is_floating_point_v<T>) {
            if (!std::isfinite(x)) return false;
        }
        if (carrier_ == Carrier::UnitInterval) return x > T(0) && x < T(1);
        return true;
    }

    void require_in_carrier(const T& x) const {
        if (!contains(x))
            throw DomainError("sample " + std::to_string(to_double(x)) + " is outside the carrier " +
                              to_string(carrier_) + " of loop '" + name_ + "'");
    }

private:
    std::string name_;
    BinaryOp op_;
    T unit_;
    UnaryOp inv_;
    Carrier carrier_;
    Backend backend_;
};

/// Additive group on R; the associative baseline.
template <class T>
RealLoop<T> additive_group() {
    return RealLoop<T>(
        "addition", [](const T& x, const T& y) { return T(x + y); }, T(0), [](const T& x) { return T(-x); },
        Carrier::RealLine, std::is_floating_point_v<T> ? Backend::Float : Backend::ExactRational);
}

/// Outcome of a sampled property check.
struct CheckReport {
    std::string property;
    std::size_t samples = 0;
    double max_residual = 0.0;
    std::vector<std::vector<double>> worst_case;
    double tolerance = 0.0;
    // Strict checks (monotonicity) pass only when max_residual < tolerance.
    bool strict = false;
    bool passed = false;
    std::optional<std::uint64_t> seed;
};

namespace detail {

class ResidualTracker {
public:
    explicit ResidualTracker(std::string property) : property_(std::move(property)) {}

    // NaN residuals count as infinitely bad.
    void add(double residual, std::vector<double> inputs) {
        ++count_;
        if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
        if (first_ || residual > max_) {
            max_ = residual;
            worst_ = std::move(inputs);
            first_ = false;
        }
    }

    CheckReport finish(double tolerance, bool strict = false) const {
        CheckReport r;
        r.property = property_;
        r.samples = count_;
        r.max_residual = max_;
        if (!first_) r.worst_case.push_back(worst_);
        r.tolerance = tolerance;
        r.strict = strict;
        r.passed = strict ? (max_ < tolerance) : (max_ <= tolerance);
        return r;
    }

private:
    std::string property_;
    double max_ = 0.0;
    std::vector<double> worst_;
    std::size_t count_ = 0;
    bool first_ = true;
};

template <class T>
double abs_diff(const T& a, const T& b) {
    using std::abs;
    return to_double(T(abs(T(a - b))));
}

template <class T>
double resolve_tolerance(const RealLoop<T>& loop, std::optional<double> tol) {
    return tol ? *tol : default_tolerance(loop.backend());
}

}  // namespace detail

/// max over samples of max(|x.e - x|, |e.x - x|).
template <class T>
CheckReport check_identity(const RealLoop<T>& loop, std::span<const T> samples, std::optional<double> tol = {}) {
    detail::ResidualTracker tr("identity");
    const T& e = loop.unit();
    for (const T& x : samples) {
        loop.require_in_carrier(x);
        const double r = std::max(detail::abs_diff(loop(x, e), x), detail::abs_diff(loop(e, x), x));
        tr.add(r, {to_double(x)});
    }
    return tr.finish(detail::resolve_tolerance(loop, tol));
}

/// Two-sided inverses and involutivity of inv: x.x^-1 = x^-1.x = e, (x^-1)^-1 = x.
template <class T>
CheckReport check_inverse(const RealLoop<T>& loop, std::span<const T> samples, std::optional<double> tol = {}) {
    detail::ResidualTracker tr("inverse");
    const T& e = loop.unit();
    for (const T& x : samples) {
        loop.require_in_carrier(x);
        const T xi = loop.inv(x);
        const double r = std::max({detail::abs_diff(loop(x, xi), e), detail::abs_diff(loop(xi, x), e),
                                   detail::abs_diff(loop.inv(xi), x)});
        tr.add(r, {to_double(x)});
    }
    return tr.finish(detail::resolve_tolerance(loop, tol));
}

/// Inverse property x(x^-1 y) = y = (y x^-1) x on sampled pairs (x, y).
/// Both identities are evaluated even when the loop is commutative.
template <class T>
CheckReport check_inverse_property(const RealLoop<T>& loop, std::span<const std::pair<T, T>> samples,
                                   std::optional<double> tol = {}) {
    detail::ResidualTracker tr("inverse_property");
    for (const auto& [x, y] : samples) {
        loop.require_in_carrier(x);
        loop.require_in_carrier(y);
        const T xi = loop.inv(x);
        const double left = detail::abs_diff(loop(x, loop(xi, y)), y);
        const double right = detail::abs_diff(loop(loop(y, xi), x), y);
        tr.add(std::max(left, right), {to_double(x), to_double(y)});
    }
    return tr.finish(detail::resolve_tolerance(loop, tol));
}

template <class T>
CheckReport check_commutative(const RealLoop<T>& loop, std::span<const std::pair<T, T>> samples,
                              std::optional<double> tol = {}) {
    detail::ResidualTracker tr("commutative");
    for (const auto& [x, y] : samples) {
        loop.require_in_carrier(x);
        loop.require_in_carrier(y);
        tr.add(detail::abs_diff(loop(x, y), loop(y, x)), {to_double(x), to_double(y)});
    }
    return tr.finish(detail::resolve_tolerance(loop, tol));
}

enum class TranslationSide { Right, Left };

/// Strict monotonicity of x -> x.t (Right) or x -> t.x (Left) along a strictly
/// increasing grid. max_residual is the negated smallest consecutive gap, so
/// the check passes iff every gap is positive.
template <class T>
CheckReport check_translation_monotone(const RealLoop<T>& loop, const T& t, std::span<const T> grid,
                                       TranslationSide side = TranslationSide::Right) {
    loop.require_in_carrier(t);
    if (grid.size() < 2) throw InputError("translation grid needs at least two points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        loop.require_in_carrier(grid[i]);
        if (i > 0 && !(grid[i - 1] < grid[i])) throw InputError("translation grid is not strictly increasing");
    }
    auto translate = [&](const T& x) { return side == TranslationSide::Right ? loop(x, t) : loop(t, x); };
    detail::ResidualTracker tr(side == TranslationSide::Right ? "right_translation_monotone"
                                                              : "left_translation_monotone");
    T prev = translate(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        T cur = translate(grid[i]);
        tr.add(-to_double(T(cur - prev)), {to_double(grid[i - 1]), to_double(grid[i]), to_double(t)});
        prev = std::move(cur);
    }
    return tr.finish(0.0, /*strict=*/true);
}

template <class T>
struct AssociativityWitness {
    T x, y, z;
    T lhs;  // (x.y).z
    T rhs;  // x.(y.z)
    double defect = 0.0;
};

template <class T>
AssociativityWitness<T> associativity_defect(const RealLoop<T>& loop, const T& x, const T& y, const T& z) {
    AssociativityWitness<T> w{x, y, z, loop(loop(x, y), z), loop(x, loop(y, z)), 0.0};
    w.defect = detail::abs_diff(w.lhs, w.rhs);
    return w;
}

/// Witness search plan. Power candidates x are tried first as the triples
/// (x, x, x.x) and (x.x, x, x), which compare x^2.x^2 against x^3.x; then
/// random_triples uniform triples are drawn from the carrier (a box of
/// half-width real_range on R).
template <class T>
struct AssociativitySearch {
    std::vector<T> power_candidates;
    std::size_t random_triples = 10000;
    std::uint64_t seed = 0;
    double real_range = 5.0;
};

template <class T>
std::vector<T> default_power_candidates(Carrier carrier) {
    if (carrier == Carrier::RealLine) return {T(1), T(-1), T(1) / 2, T(-1) / 2, T(2), T(-2), T(3), T(-3)};
    std::vector<T> out;
    for (int k = 1; k <= 9; ++k) {
        if (k == 5) continue;
        out.push_back(T(k) / 10);
    }
    for (int k : {55, 65, 45, 35}) out.push_back(T(k) / 100);
    return out;
}

template <class T>
AssociativitySearch<T> default_associativity_search(const RealLoop<T>& loop, std::uint64_t seed = 0) {
    AssociativitySearch<T> s;
    s.power_candidates = default_power_candidates<T>(loop.carrier());
    s.seed = seed;
    return s;
}

/// Returns the largest-defect power-family witness if it reaches threshold;
/// otherwise the first random triple whose defect reaches threshold; otherwise
/// nothing.
template <class T>
std::optional<AssociativityWitness<T>> find_associativity_witness(const RealLoop<T>& loop,
                                                                  const AssociativitySearch<T>& strategy,
                                                                  double threshold) {
    if (!(threshold > 0.0)) throw InputError("associativity threshold must be positive");

    std::optional<AssociativityWitness<T>> best;
    auto consider = [&](AssociativityWitness<T> w) {
        if (w.defect >= threshold && (!best || w.defect > best->defect)) best = std::move(w);
    };
    for (const T& x : strategy.power_candidates) {
        loop.require_in_carrier(x);
        const T x2 = loop(x, x);
        consider(associativity_defect(loop, x, x, x2));
        consider(associativity_defect(loop, x2, x, x));
    }
    if (best) return best;

    Rng rng(strategy.seed);
    auto draw = [&]() -> T {
        if (loop.carrier() == Carrier::UnitInterval) return T(uniform_open(rng));
        return T(uniform_in(rng, -strategy.real_range, strategy.real_range));
    };
    for (std::size_t i = 0; i < strategy.random_triples; ++i) {
        const T x = draw();
        const T y = draw();
        const T z = draw();
        auto w = associativity_defect(loop, x, y, z);
        if (w.defect >= threshold) return w;
    }
    return std::nullopt;
}

/// Left-nested power x^n = x^(n-1).x, with x^0 = unit. For n >= 4 in a loop
/// that is not power associative this is one bracketing among several, not a
/// canonical value.
template <class T>
T power(const RealLoop<T>& loop, const T& x, int n) {
    if (n < 0) throw InputError("power exponent must be non-negative");
    loop.require_in_carrier(x);
    if (n == 0) return loop.unit();
    T acc = x;
    for (int i = 1; i < n; ++i) acc = loop(acc, x);
    return acc;
}

}  // namespace jamesian
