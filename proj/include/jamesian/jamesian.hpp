#pragma once

// Involutive Jamesian functions J : (0,1)^2 -> (0,1):
//
//   J(a, J(a, b)) = b,   J(a, b) + J(b, a) = 1,   J(., b) strictly increasing.
//
// Constructors cover Adams' closed form, the representable family
// f^-1(f(a) - f(b)), transfers f^-1(f(a) * f(1-b)) of a loop * on R, and
// functions read off a loop on (0,1). The checkers measure the axioms, the
// transitivity defect (zero iff representable) and distinctness.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "format.hpp"
#include "homeo.hpp"
#include "loop_core.hpp"
#include "sampling.hpp"

namespace jamesian {

enum class ConstructionKind { Adams, Representable, LoopTransfer, FromInduced, Custom };

inline const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::Adams: return "ADAMS";
        case ConstructionKind::Representable: return "REPRESENTABLE";
        case ConstructionKind::LoopTransfer: return "LOOP_TRANSFER";
        case ConstructionKind::FromInduced: return "FROM_INDUCED";
        case ConstructionKind::Custom: return "CUSTOM";
    }
    return "?";
}

struct Construction {
    ConstructionKind kind = ConstructionKind::Custom;
    std::string description;
};

/// Tolerances by evaluation path.
inline constexpr double kClosedFormTolerance = 1e-12;
inline constexpr double kTransferTolerance = 1e-9;

class JamesianFunction {
public:
    using Evaluator = std::function<double(double, double)>;

    JamesianFunction(Evaluator eval, Construction construction, double tolerance)
        : eval_(std::move(eval)), construction_(std::move(construction)), tolerance_(tolerance) {}

    /// Interior evaluation; both arguments must lie in (0,1).
    double operator()(double a, double b) const {
        if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
            throw DomainError("J(" + format_number(a) + ", " + format_number(b) + "): arguments must lie in (0,1)");
        return eval_(a, b);
    }

    const Construction& construction() const { return construction_; }
    const std::string& name() const { return construction_.description; }
    double tolerance() const { return tolerance_; }

private:
    Evaluator eval_;
    Construction construction_;
    double tolerance_;
};

/// P(a, b) = a(1-b) / (a(1-b) + (1-a)b).
inline double adams(double a, double b) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
        throw DomainError("adams(" + format_number(a) + ", " + format_number(b) + "): arguments must lie in (0,1)");
    const double num = a * (1.0 - b);
    return num / (num + (1.0 - a) * b);
}

inline JamesianFunction adams_function() {
    return JamesianFunction([](double a, double b) { return adams(a, b); }, {ConstructionKind::Adams, "adams"},
                            kClosedFormTolerance);
}

inline double tolerance_for(const OddHomeomorphism& f, double closed_form) {
    return f.inversion() == InversionMode::Bisection ? 10.0 * f.inversion_tolerance() : closed_form;
}

/// J(a, b) = f^-1(f(a) - f(b)).
inline JamesianFunction from_representable(OddHomeomorphism f) {
    const double tol = tolerance_for(f, kClosedFormTolerance);
    std::string desc = "representable(" + f.name() + ")";
    return JamesianFunction([f = std::move(f)](double a, double b) { return f.inverse(f.forward(a) - f.forward(b)); },
                            {ConstructionKind::Representable, std::move(desc)}, tol);
}

/// Checks that a loop on R is commutative with unit 0, inverse x -> -x, the
/// inverse property and strictly increasing translations, on a fixed
/// deterministic sample. Returns one report per hypothesis.
inline std::vector<CheckReport> check_transfer_hypotheses(const RealLoop<double>& loop, double tol = 1e-9) {
    if (loop.carrier() != Carrier::RealLine)
        throw ConstructionError("loop '" + loop.name() + "' must live on R to be transferred");
    const std::vector<double> pts{-7.5, -3.0, -2.0, -1.5, -1.0, -0.6, -0.25, 0.0, 0.2, 0.5, 1.0, 1.3, 2.0, 4.0, 9.0};
    std::vector<std::pair<double, double>> pairs;
    for (double x : pts)
        for (double y : pts) pairs.emplace_back(x, y);

    std::vector<CheckReport> out;
    out.push_back(check_identity<double>(loop, pts, tol));
    out.push_back(check_inverse<double>(loop, pts, tol));
    out.push_back(check_commutative<double>(loop, pairs, tol));
    out.push_back(check_inverse_property<double>(loop, pairs, tol));

    detail::ResidualTracker shape("unit_zero_inverse_negation");
    shape.add(std::abs(loop.unit()), {0.0});
    for (double x : pts) shape.add(std::abs(loop.inv(x) + x), {x});
    out.push_back(shape.finish(tol));

    std::vector<double> grid;
    for (int i = -40; i <= 40; ++i) grid.push_back(0.25 * i);
    CheckReport mono;
    for (double t : pts) {
        auto r = check_translation_monotone<double>(loop, t, grid);
        if (mono.property.empty() || r.max_residual > mono.max_residual) mono = r;
    }
    mono.samples = pts.size() * (grid.size() - 1);
    mono.property = "translation_monotone";
    out.push_back(mono);
    return out;
}

/// J(a, b) = f^-1(f(a) * f(1-b)) for a loop * on R. f(1-b) is evaluated as
/// -f(b), which the odd symmetry of f makes exact and which stays finite for
/// b close to 0. Throws ConstructionError naming every failed hypothesis.
inline JamesianFunction from_loop_transfer(RealLoop<double> loop, OddHomeomorphism f) {
    std::string failed;
    for (const auto& r : check_transfer_hypotheses(loop)) {
        if (!r.passed) failed += (failed.empty() ? "" : ", ") + r.property;
    }
    if (!failed.empty())
        throw ConstructionError("loop '" + loop.name() + "' fails transfer hypotheses: " + failed);
    const double tol = tolerance_for(f, kTransferTolerance);
    std::string desc = "transfer(" + loop.name() + ", " + f.name() + ")";
    return JamesianFunction(
        [loop = std::move(loop), f = std::move(f)](double a, double b) {
            return f.inverse(loop(f.forward(a), -f.forward(b)));
        },
        {ConstructionKind::LoopTransfer, std::move(desc)}, tol);
}

/// J(a, b) = a.(1-b) for a loop on (0,1) with unit 1/2 and inverse 1-a.
inline JamesianFunction from_induced(RealLoop<double> loop, double tol = kTransferTolerance) {
    if (loop.carrier() != Carrier::UnitInterval)
        throw ConstructionError("loop '" + loop.name() + "' must live on (0,1)");
    std::string desc = "from_induced(" + loop.name() + ")";
    return JamesianFunction([loop = std::move(loop)](double a, double b) { return loop(a, 1.0 - b); },
                            {ConstructionKind::FromInduced, std::move(desc)}, tol);
}

/// Arbitrary evaluator; used for negative controls and external functions.
inline JamesianFunction custom_function(std::string name, JamesianFunction::Evaluator eval,
                                        double tol = kTransferTolerance) {
    return JamesianFunction(std::move(eval), {ConstructionKind::Custom, std::move(name)}, tol);
}

/// a.b = J(a, 1-b) on (0,1); unit 1/2, inverse a -> 1-a.
inline RealLoop<double> induced_loop(const JamesianFunction& J) {
    return RealLoop<double>(
        "induced(" + J.name() + ")", [J](const double& a, const double& b) { return J(a, 1.0 - b); }, 0.5,
        [](const double& a) { return 1.0 - a; }, Carrier::UnitInterval, Backend::Float);
}

// ---------------------------------------------------------------------------
// Transitivity

enum class Verdict { RepresentableConsistent, NonTransitiveWitnessFound };

inline const char* to_string(Verdict v) {
    return v == Verdict::RepresentableConsistent ? "REPRESENTABLE_CONSISTENT" : "NON_TRANSITIVE_WITNESS_FOUND";
}

struct TransitivityWitness {
    Triple triple{};
    double lhs = 0.0;  // J(J(a,c), J(b,c))
    double rhs = 0.0;  // J(a,b)
    double defect = 0.0;
};

inline TransitivityWitness transitivity_at(const JamesianFunction& J, const Triple& t) {
    const auto [a, b, c] = t;
    TransitivityWitness w;
    w.triple = t;
    w.lhs = J(J(a, c), J(b, c));
    w.rhs = J(a, b);
    w.defect = std::abs(w.lhs - w.rhs);
    return w;
}

struct DefectReport {
    double max_defect = 0.0;
    Triple argmax{};
    std::size_t samples = 0;
    double threshold = 0.0;
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::RepresentableConsistent;
};

/// max |J(J(a,c), J(b,c)) - J(a,b)| over the pinned triples followed by the
/// seeded random ones. A defect above threshold certifies non-transitivity.
inline DefectReport transitivity_defect(const JamesianFunction& J, const TripleSampling& sampling,
                                        double threshold = 1e-9) {
    DefectReport rep;
    rep.threshold = threshold;
    rep.seed = sampling.seed;
    bool first = true;
    auto take = [&](const Triple& t) {
        const double d = transitivity_at(J, t).defect;
        ++rep.samples;
        if (first || d > rep.max_defect) {
            rep.max_defect = d;
            rep.argmax = t;
            first = false;
        }
    };
    for (const auto& t : sampling.pinned) take(t);
    Rng rng(sampling.seed);
    for (std::size_t i = 0; i < sampling.random_count; ++i) {
        const double a = uniform_open(rng);
        const double b = uniform_open(rng);
        const double c = uniform_open(rng);
        take({a, b, c});
    }
    rep.verdict = rep.max_defect > threshold ? Verdict::NonTransitiveWitnessFound : Verdict::RepresentableConsistent;
    return rep;
}

/// First triple (pinned ones first, then seeded random draws) whose
/// transitivity defect reaches threshold.
inline std::optional<TransitivityWitness> find_transitivity_witness(const JamesianFunction& J,
                                                                    const TripleSampling& sampling,
                                                                    double threshold) {
    if (!(threshold > 0.0)) throw InputError("witness threshold must be positive");
    for (const auto& t : sampling.pinned) {
        auto w = transitivity_at(J, t);
        if (w.defect >= threshold) return w;
    }
    Rng rng(sampling.seed);
    for (std::size_t i = 0; i < sampling.random_count; ++i) {
        const double a = uniform_open(rng);
        const double b = uniform_open(rng);
        const double c = uniform_open(rng);
        auto w = transitivity_at(J, {a, b, c});
        if (w.defect >= threshold) return w;
    }
    return std::nullopt;
}

/// Smallest transitivity defect over the 27 triples obtained by moving each
/// coordinate of t by -radius, 0 or +radius. A positive value means the defect
/// at t is not an isolated artefact.
inline double defect_persistence(const JamesianFunction& J, const Triple& t, double radius = 1e-3) {
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            for (int k = -1; k <= 1; ++k) {
                const Triple p{t[0] + i * radius, t[1] + j * radius, t[2] + k * radius};
                lowest = std::min(lowest, transitivity_at(J, p).defect);
            }
    return lowest;
}

// ---------------------------------------------------------------------------
// Axioms

namespace detail {

// Solve J(a, x) = c for x; J(a, .) is strictly decreasing.
inline double solve_second_argument(const JamesianFunction& J, double a, double c) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) break;
        if (J(a, mid) > c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Axioms and basic identities on the n x n interior lattice:
/// involutive, complement, strictly_increasing (in the first argument),
/// reflection J(a,b) = J(1-b,1-a), diagonal J(a,a) = 1/2, unit J(a,1/2) = a,
/// and solution_symmetry: b solving J(a,b) = c numerically satisfies J(a,c) = b.
inline std::vector<CheckReport> check_axioms(const JamesianFunction& J, int n, std::optional<double> tol = {}) {
    if (n < 2) throw InputError("axiom grid needs n >= 2");
    const double t = tol ? *tol : J.tolerance();
    const auto pts = interior_lattice(n);

    detail::ResidualTracker involutive("involutive");
    detail::ResidualTracker complement("complement");
    detail::ResidualTracker reflection("reflection");
    detail::ResidualTracker monotone("strictly_increasing");
    detail::ResidualTracker diagonal("diagonal_half");
    detail::ResidualTracker unit("unit_half");
    detail::ResidualTracker solution("solution_symmetry");

    for (double a : pts) {
        diagonal.add(std::abs(J(a, a) - 0.5), {a});
        unit.add(std::abs(J(a, 0.5) - a), {a});
        for (double b : pts) {
            const double v = J(a, b);
            involutive.add(std::abs(J(a, v) - b), {a, b});
            complement.add(std::abs(v + J(b, a) - 1.0), {a, b});
            reflection.add(std::abs(v - J(1.0 - b, 1.0 - a)), {a, b});
            const double solved = detail::solve_second_argument(J, a, b);
            solution.add(std::abs(J(a, b) - solved), {a, b});
        }
    }
    for (double b : pts) {
        double prev = J(pts[0], b);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const double cur = J(pts[i], b);
            monotone.add(prev - cur, {pts[i - 1], pts[i], b});
            prev = cur;
        }
    }
    return {involutive.finish(t), complement.finish(t),   monotone.finish(0.0, true), reflection.finish(t),
            diagonal.finish(t),   unit.finish(t),         solution.finish(t)};
}

/// Sign conditions 2 and 3 of the proto-James list plus the [0,1] range,
/// on the n x n interior lattice. Strict checks: residual is the largest
/// margin by which a required strict inequality is missed (negative = holds).
inline std::vector<CheckReport> check_proto_james(const JamesianFunction& J, int n) {
    if (n < 2) throw InputError("proto-James grid needs n >= 2");
    const auto pts = interior_lattice(n);
    detail::ResidualTracker order("stronger_team_favoured");
    detail::ResidualTracker shift("weak_opponent_raises_odds");
    detail::ResidualTracker range("unit_range");
    for (double a : pts)
        for (double b : pts) {
            const double v = J(a, b);
            range.add(std::max(-v, v - 1.0), {a, b});
            if (a > b) order.add(0.5 - v, {a, b});
            if (a < b) order.add(v - 0.5, {a, b});
            if (b < 0.5) shift.add(a - v, {a, b});
            if (b > 0.5) shift.add(v - a, {a, b});
        }
    return {order.finish(0.0, true), shift.finish(0.0, true), range.finish(0.0)};
}

// ---------------------------------------------------------------------------
// Boundary and comparison

/// Unique continuous extension to [0,1]^2 minus {(0,0), (1,1)}: interior
/// points evaluate J; on the boundary J(a,0) = 1, J(a,1) = 0, J(0,b) = 0 and
/// J(1,b) = 1.
inline double eval_extended(const JamesianFunction& J, double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw DomainError("(" + format_number(a) + ", " + format_number(b) + ") lies outside [0,1]^2");
    if ((a == 0.0 && b == 0.0) || (a == 1.0 && b == 1.0))
        throw UndefinedCornerError("J is undefined at the corner (" + format_number(a) + ", " + format_number(b) +
                                   ")");
    if (b == 0.0) return 1.0;
    if (b == 1.0) return 0.0;
    if (a == 0.0) return 0.0;
    if (a == 1.0) return 1.0;
    return J(a, b);
}

/// J(a, 2^-n) for n = 1..max_n.
inline std::vector<double> boundary_sequence(const JamesianFunction& J, double a, int max_n) {
    std::vector<double> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(J(a, std::ldexp(1.0, -n)));
    return out;
}

struct DistinctnessWitness {
    double a = 0.0;
    double b = 0.0;
    double gap = 0.0;
};

/// Lattice point maximising |J1 - J2|, if that gap exceeds min_gap.
inline std::optional<DistinctnessWitness> distinctness_witness(const JamesianFunction& J1,
                                                               const JamesianFunction& J2, int n,
                                                               double min_gap = 1e-9) {
    DistinctnessWitness best;
    for (double a : interior_lattice(n))
        for (double b : interior_lattice(n)) {
            const double gap = std::abs(J1(a, b) - J2(a, b));
            if (gap > best.gap) best = {a, b, gap};
        }
    if (best.gap > min_gap) return best;
    return std::nullopt;
}

}  // namespace jamesian
