#include <gtest/gtest.h>

#include <cmath>

#include "jamesian/jamesian.hpp"
#include "jamesian/salzmann.hpp"
#include "oracles.hpp"

using namespace jamesian;

namespace {

JamesianFunction salzmann_piecewise(double eps = 0.1) {
    return from_loop_transfer(salzmann_loop(), piecewise_identity(eps));
}

const CheckReport& find(const std::vector<CheckReport>& reports, const std::string& name) {
    for (const auto& r : reports)
        if (r.property == name) return r;
    throw std::logic_error("missing report " + name);
}

}  // namespace

TEST(Adams, Values) {
    EXPECT_DOUBLE_EQ(adams(0.3, 0.5), 0.3);
    EXPECT_DOUBLE_EQ(adams(0.7, 0.7), 0.5);
    EXPECT_NEAR(adams(0.6, 0.4), oracle::to_d(oracle::adams(oracle::q(3, 5), oracle::q(2, 5))), 1e-16);
    EXPECT_NEAR(adams(0.6, 0.4), 9.0 / 13.0, 1e-16);
    EXPECT_THROW(adams(0.0, 0.5), DomainError);
    EXPECT_THROW(adams(0.5, 1.0), DomainError);
}

TEST(FromRepresentable, LogitMatchesAdamsOnLattice) {
    const auto J = from_representable(logit());
    double worst = 0.0;
    for (double a : interior_lattice(99))
        for (double b : interior_lattice(99)) worst = std::max(worst, std::abs(J(a, b) - adams(a, b)));
    EXPECT_LE(worst, 1e-12);
}

TEST(FromRepresentable, DiagonalIsHalf) {
    for (const auto& f : {logit(), scaled_logit(4.0), piecewise_identity(0.2)}) {
        const auto J = from_representable(f);
        for (double a : {0.01, 0.3, 0.5, 0.77}) EXPECT_EQ(J(a, a), 0.5) << f.name();
    }
}

TEST(FromRepresentable, ScaledLogitCancelsToAdams) {
    // Brute evaluation: f = 2 logit, f^-1(y) = 1 / (1 + exp(-y/2)).
    const double fa = 2.0 * std::log(0.6 / 0.4);
    const double fb = 2.0 * std::log(0.4 / 0.6);
    const double brute = 1.0 / (1.0 + std::exp(-(fa - fb) / 2.0));
    const auto J = from_representable(scaled_logit(2.0));
    EXPECT_NEAR(J(0.6, 0.4), brute, 1e-15);
    EXPECT_NEAR(J(0.6, 0.4), 9.0 / 13.0, 1e-15);
}

TEST(FromLoopTransfer, SalzmannPiecewiseExamples) {
    const auto J = salzmann_piecewise();
    EXPECT_NEAR(J(0.8, 0.6), oracle::to_d(oracle::transfer_identity(oracle::q(4, 5), oracle::q(3, 5), oracle::q(1, 10))),
                1e-15);
    EXPECT_NEAR(J(0.8, 0.6), 0.75, 1e-15);
    EXPECT_NEAR(J(0.8, 0.5), 0.8, 1e-15);
    EXPECT_EQ(J.construction().kind, ConstructionKind::LoopTransfer);
}

TEST(FromLoopTransfer, AdditionWithLogitIsAdams) {
    const auto J = from_loop_transfer(additive_group<double>(), logit());
    for (double a : interior_lattice(19))
        for (double b : interior_lattice(19)) EXPECT_NEAR(J(a, b), adams(a, b), 1e-12);
}

TEST(FromLoopTransfer, RejectsLoopWithoutHypotheses) {
    const RealLoop<double> skew(
        "skew", [](const double& x, const double& y) { return x + y + x * y * (x - y); }, 0.0,
        [](const double& x) { return -x; }, Carrier::RealLine, Backend::Float);
    try {
        from_loop_transfer(skew, logit());
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("commutative"), std::string::npos) << msg;
        EXPECT_NE(msg.find("inverse_property"), std::string::npos) << msg;
    }
    EXPECT_THROW(from_loop_transfer(induced_loop(adams_function()), logit()), ConstructionError);
}

TEST(InducedLoop, Values) {
    const auto loop = induced_loop(adams_function());
    EXPECT_NEAR(loop(0.6, 0.6), 9.0 / 13.0, 1e-15);
    EXPECT_DOUBLE_EQ(loop(0.27, 0.5), 0.27);
    EXPECT_DOUBLE_EQ(loop(0.27, 0.73), 0.5);
    EXPECT_EQ(loop.unit(), 0.5);
    EXPECT_EQ(loop.inv(0.25), 0.75);
}

TEST(InducedLoop, InversePropertyOnSamples) {
    std::vector<std::pair<double, double>> pairs;
    for (double a : interior_lattice(15))
        for (double b : interior_lattice(15)) pairs.emplace_back(a, b);
    for (const auto& J : {adams_function(), salzmann_piecewise(), from_loop_transfer(salzmann_loop(), logit())}) {
        const auto loop = induced_loop(J);
        EXPECT_TRUE(check_inverse_property<double>(loop, pairs).passed) << J.name();
        EXPECT_TRUE(check_commutative<double>(loop, pairs).passed) << J.name();
    }
}

TEST(FromInduced, RoundTripsThroughInducedLoop) {
    const auto J = salzmann_piecewise();
    const auto K = from_induced(induced_loop(J));
    for (double a : interior_lattice(9))
        for (double b : interior_lattice(9)) EXPECT_NEAR(J(a, b), K(a, b), 1e-15);
    EXPECT_THROW(from_induced(salzmann_loop()), ConstructionError);
}

TEST(TransitivityDefect, PinnedSalzmannTriple) {
    const auto J = salzmann_piecewise();
    const auto w = transitivity_at(J, {0.8, 0.6, 0.7});
    // Oracle: J(0.8,0.7) = 7/10, J(0.6,0.7) = 7/20, J(7/10, 7/20) = 31/40, J(0.8,0.6) = 3/4.
    using oracle::q;
    const auto Jq = [](const oracle::Q& a, const oracle::Q& b) { return oracle::transfer_identity(a, b, q(1, 10)); };
    const oracle::Q lhs = Jq(Jq(q(4, 5), q(7, 10)), Jq(q(3, 5), q(7, 10)));
    const oracle::Q rhs = Jq(q(4, 5), q(3, 5));
    EXPECT_EQ(lhs, q(31, 40));
    EXPECT_EQ(rhs, q(3, 4));
    EXPECT_NEAR(w.lhs, oracle::to_d(lhs), 1e-15);
    EXPECT_NEAR(w.rhs, oracle::to_d(rhs), 1e-15);
    EXPECT_NEAR(w.defect, 0.025, 1e-9);

    const auto rep = transitivity_defect(J, {1000, 3, {{0.8, 0.6, 0.7}}});
    EXPECT_GE(rep.max_defect, 0.02);
    EXPECT_EQ(rep.verdict, Verdict::NonTransitiveWitnessFound);
    EXPECT_EQ(rep.samples, 1001u);
    EXPECT_NEAR(transitivity_at(J, rep.argmax).defect, rep.max_defect, 1e-12);
}

TEST(TransitivityDefect, AdamsIsTransitive) {
    const auto rep = transitivity_defect(adams_function(), {10000, 1, {}});
    EXPECT_LE(rep.max_defect, 1e-9);
    EXPECT_EQ(rep.verdict, Verdict::RepresentableConsistent);
    EXPECT_EQ(rep.seed, 1u);
}

TEST(TransitivityDefect, HalfSliceIsExact) {
    Rng rng(4);
    for (const auto& J : {adams_function(), salzmann_piecewise()}) {
        for (int i = 0; i < 200; ++i) {
            const double a = uniform_open(rng);
            const double b = uniform_open(rng);
            EXPECT_LE(transitivity_at(J, {a, b, 0.5}).defect, 1e-15) << J.name();
        }
    }
}

TEST(TransitivityDefect, PersistsUnderPerturbation) {
    const auto J = salzmann_piecewise();
    EXPECT_GT(defect_persistence(J, {0.8, 0.6, 0.7}, 1e-3), 0.01);
    EXPECT_LT(defect_persistence(adams_function(), {0.8, 0.6, 0.7}, 1e-3), 1e-12);
}

TEST(FindTransitivityWitness, PinnedThenRandom) {
    const auto J = salzmann_piecewise();
    const auto w = find_transitivity_witness(J, {100, 0, {{0.3, 0.6, 0.5}, {0.8, 0.6, 0.7}}}, 0.01);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->triple, (Triple{0.8, 0.6, 0.7}));

    const auto r = find_transitivity_witness(J, {10000, 8, {}}, 0.01);
    ASSERT_TRUE(r);
    EXPECT_GE(r->defect, 0.01);

    EXPECT_FALSE(find_transitivity_witness(adams_function(), {10000, 0, {}}, 1e-6));
    EXPECT_THROW(find_transitivity_witness(adams_function(), {}, 0.0), InputError);
}

TEST(CheckAxioms, AdamsAtClosedFormTolerance) {
    const auto reports = check_axioms(adams_function(), 99, 1e-12);
    ASSERT_EQ(reports.size(), 7u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.property << " " << r.max_residual;
}

TEST(CheckAxioms, SalzmannTransferAtTransferTolerance) {
    for (const auto& J : {salzmann_piecewise(0.1), salzmann_piecewise(0.3), from_loop_transfer(salzmann_loop(), logit())}) {
        for (const auto& r : check_axioms(J, 99, 1e-9)) EXPECT_TRUE(r.passed) << J.name() << " " << r.property;
    }
}

TEST(CheckAxioms, RepresentableFamilies) {
    const auto bisected = from_forward("bisected-logit", [](double x) { return std::log(x) - std::log1p(-x); });
    for (const auto& J : {from_representable(piecewise_identity(0.2)), from_representable(scaled_logit(3.0)),
                          from_representable(bisected)}) {
        for (const auto& r : check_axioms(J, 49)) EXPECT_TRUE(r.passed) << J.name() << " " << r.property << " "
                                                                         << r.max_residual;
    }
}

TEST(CheckAxioms, NegativeControlFailsInvolutivity) {
    const auto J = custom_function("first-argument", [](double a, double) { return a; });
    const auto reports = check_axioms(J, 19);
    EXPECT_FALSE(find(reports, "involutive").passed);
    EXPECT_FALSE(find(reports, "complement").passed);
}

TEST(CheckAxioms, ReportsReproduceWorstCase) {
    const auto J = custom_function("skewed", [](double a, double b) { return adams(a, b) * (1 + 1e-3 * a * b); });
    const auto reports = check_axioms(J, 19);
    const auto& r = find(reports, "complement");
    ASSERT_EQ(r.worst_case.size(), 1u);
    const double a = r.worst_case[0][0];
    const double b = r.worst_case[0][1];
    EXPECT_DOUBLE_EQ(std::abs(J(a, b) + J(b, a) - 1.0), r.max_residual);
}

TEST(CheckProtoJames, HoldsForInvolutiveFunctions) {
    for (const auto& J : {adams_function(), salzmann_piecewise(), from_loop_transfer(salzmann_loop(), logit())}) {
        for (const auto& r : check_proto_james(J, 49)) EXPECT_TRUE(r.passed) << J.name() << " " << r.property;
    }
}

TEST(EvalExtended, Boundary) {
    const auto J = adams_function();
    EXPECT_EQ(eval_extended(J, 0.7, 0.0), 1.0);
    EXPECT_EQ(eval_extended(J, 0.7, 1.0), 0.0);
    EXPECT_EQ(eval_extended(J, 0.0, 0.3), 0.0);
    EXPECT_EQ(eval_extended(J, 1.0, 0.3), 1.0);
    EXPECT_EQ(eval_extended(J, 0.0, 1.0), 0.0);
    EXPECT_EQ(eval_extended(J, 1.0, 0.0), 1.0);
    EXPECT_NEAR(eval_extended(J, 0.6, 0.4), 9.0 / 13.0, 1e-16);
    EXPECT_THROW(eval_extended(J, 0.0, 0.0), UndefinedCornerError);
    EXPECT_THROW(eval_extended(J, 1.0, 1.0), UndefinedCornerError);
    EXPECT_THROW(eval_extended(J, 1.5, 0.2), DomainError);
}

TEST(BoundarySequence, IncreasesTowardOne) {
    for (const auto& J : {adams_function(), salzmann_piecewise(), from_loop_transfer(salzmann_loop(), logit())}) {
        const auto seq = boundary_sequence(J, 0.7, 60);
        std::size_t cross = seq.size();
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq[i] > 0.999) {
                cross = i;
                break;
            }
        ASSERT_LT(cross, seq.size()) << J.name();
        for (std::size_t i = 1; i <= cross; ++i) EXPECT_LT(seq[i - 1], seq[i]) << J.name() << " n=" << i + 1;
    }
}

TEST(Distinctness, TransfersOverSalzmannDiffer) {
    const auto w = distinctness_witness(from_loop_transfer(salzmann_loop(), logit()), salzmann_piecewise(), 99);
    ASSERT_TRUE(w);
    EXPECT_GT(w->gap, 1e-3);
    // brute re-evaluation
    const auto Jl = from_loop_transfer(salzmann_loop(), logit());
    EXPECT_DOUBLE_EQ(std::abs(Jl(w->a, w->b) - salzmann_piecewise()(w->a, w->b)), w->gap);
}

TEST(Distinctness, NoneForEqualFunctions) {
    EXPECT_FALSE(distinctness_witness(adams_function(), adams_function(), 49));
    EXPECT_FALSE(distinctness_witness(adams_function(), from_representable(logit()), 99));
}

TEST(Distinctness, ScaledTransfersCoincideByHomogeneity) {
    // Salzmann's operation commutes with positive scaling, so f and k f induce
    // the same function even though f != k f.
    const auto w = distinctness_witness(from_loop_transfer(salzmann_loop(), logit()),
                                        from_loop_transfer(salzmann_loop(), scaled_logit(3.0)), 49);
    EXPECT_FALSE(w);
}

TEST(Correspondence, GroupIffRepresentable) {
    const auto adams_loop = induced_loop(adams_function());
    EXPECT_FALSE(find_associativity_witness(adams_loop, default_associativity_search(adams_loop, 0), 1e-6));

    const auto proper = induced_loop(salzmann_piecewise());
    auto search = default_associativity_search(proper, 0);
    search.random_triples = 0;
    const auto w = find_associativity_witness(proper, search, 1e-2);
    ASSERT_TRUE(w);
    EXPECT_GE(w->defect, 0.01);
}
