#include <catch2/catch_amalgamated.hpp>

#include "beurling/graph.hpp"
#include "beurling/growth.hpp"
#include "beurling/inversion.hpp"
#include "oracles.hpp"

using namespace beurling;

namespace {

AlgebraContext cycle_ctx(GraphPtr g, double r, double alpha) {
    FitOptions opt;
    opt.dimension_override = 1.0;
    opt.strong_dimension_override = 1.0;
    const GrowthStats s = fit_growth(g, opt);
    return {{r, alpha, 1.0}, s.density, 1.0, s.strong_density};
}

} // namespace

TEST_CASE("norm-controlled inversion bound") {
    GraphPtr c64 = build_cycle(64);
    const Weight w0 = trivial_weight(c64);
    const AlgebraContext ctx = cycle_ctx(c64, 1.0, 2.0);
    {
        const LocalizedMatrix A = scalar_matrix(c64, 2.0);
        const InvertResult inv = invert(A);
        const NormInterval ni = operator_norm(inv.inverse, 2.0, w0);
        const InversionReport rep = inverse_norm_control_check(A, inv.inverse, ctx, 2.0, w0, 1.0, ni);
        REQUIRE(rep.inverse_decay_norm == Catch::Approx(0.5));
        REQUIRE(rep.report.pass);
        REQUIRE(std::isfinite(rep.extracted_c));
        REQUIRE(rep.unweighted_l2_rhs.has_value()); // (p, w) = (2, trivial)
    }
    {
        const LocalizedMatrix Ak = successor_damping(c64, 0.8);
        const InvertResult inv = invert(Ak);
        const Weight wt = polynomial_weight(c64, 0, 0.3);
        const double ap = ap_bound(wt, 1.5).bound;
        const NormInterval ni = operator_norm(inv.inverse, 1.5, wt);
        const InversionReport rep = inverse_norm_control_check(Ak, inv.inverse, ctx, 1.5, wt, ap, ni);
        REQUIRE(rep.report.pass);
        REQUIRE(std::isfinite(rep.extracted_c));
        REQUIRE_FALSE(rep.unweighted_l2_rhs.has_value());
    }
    { // hypothesis guard: alpha <= strong_dim - dim/r
        AlgebraContext bad = ctx;
        bad.prm.r = 2.0;
        bad.prm.alpha = 0.4;
        bad.strong_dim = 1.0;
        const LocalizedMatrix A = scalar_matrix(c64, 2.0);
        const InvertResult inv = invert(A);
        const NormInterval ni = operator_norm(inv.inverse, 2.0, w0);
        REQUIRE_THROWS_AS(inverse_norm_control_check(A, inv.inverse, bad, 2.0, w0, 1.0, ni),
                          argument_error);
    }
}

TEST_CASE("entrywise inverse domination") {
    GraphPtr c64 = build_cycle(64);
    const Weight w0 = trivial_weight(c64);
    const AlgebraContext ctx = cycle_ctx(c64, 1.0, 2.0);
    auto run = [&](const LocalizedMatrix& A) {
        const InvertResult inv = invert(A);
        const NormInterval ni = operator_norm(inv.inverse, 2.0, w0);
        const StabilityChain chain = build_inversion_chain(A, ctx, 2.0, 1.0, ni);
        return entrywise_inverse_check(A, inv.inverse, ctx, 2.0, 1.0, ni, chain);
    };
    {
        const VerificationReport rep = run(identity_matrix(c64));
        REQUIRE(rep.pass);
    }
    {
        const VerificationReport rep = run(successor_damping(c64, 0.6));
        REQUIRE(rep.pass);
        REQUIRE(rep.extracted_constant > 0.0);
        REQUIRE(std::isfinite(rep.extracted_constant));
    }
    { // permuted diagonal: a circular shift by 3
        GraphPtr c16 = build_cycle(16);
        std::vector<double> a(16 * 16, 0.0);
        for (int i = 0; i < 16; ++i) a[static_cast<std::size_t>(i) * 16 + (i + 3) % 16] = 1.0;
        const LocalizedMatrix P(c16, a);
        const InvertResult inv = invert(P);
        const Weight w16 = trivial_weight(c16);
        const AlgebraContext ctx16 = cycle_ctx(c16, 1.0, 2.0);
        const NormInterval ni = operator_norm(inv.inverse, 2.0, w16);
        const StabilityChain chain = build_inversion_chain(P, ctx16, 2.0, 1.0, ni);
        const VerificationReport rep = entrywise_inverse_check(P, inv.inverse, ctx16, 2.0, 1.0, ni, chain);
        REQUIRE(rep.pass);
    }
}

TEST_CASE("asymptotics preconditions") {
    REQUIRE_THROWS_AS(inverse_decay_asymptotics({0.0, 0.8}, 1.0, 2.0, 2.0, 0.3, 512),
                      argument_error);
    REQUIRE_THROWS_AS(inverse_decay_asymptotics({0.8}, 1.0, 2.0, 2.0, 1.5, 512), argument_error);
    try {
        inverse_decay_asymptotics({0.95}, 1.0, 2.0, 2.0, 0.3, 256);
        FAIL("expected precondition error");
    } catch (const precondition_error& e) {
        REQUIRE(std::string(e.what()).find("360") != std::string::npos);
    }
}

TEST_CASE("asymptotics smoke run on a small cycle") {
    const SlopeReport rep = inverse_decay_asymptotics({0.80, 0.85, 0.90}, 1.0, 2.0, 2.0, 0.3, 512);
    REQUIRE(rep.rows.size() == 3);
    // slope targets: alpha + 1/r = 3, weighted operator norm 1,
    // witness (theta+1)/p, image (theta+p+1)/p
    REQUIRE(rep.slope_inverse_decay == Catch::Approx(3.0).margin(0.3));
    REQUIRE(rep.slope_inverse_opnorm == Catch::Approx(1.0).margin(0.3));
    REQUIRE(rep.slope_witness == Catch::Approx((0.3 + 1.0) / 2.0).margin(0.3));
    REQUIRE(rep.slope_witness_image == Catch::Approx((0.3 + 2.0 + 1.0) / 2.0).margin(0.3));
    REQUIRE(rep.max_norm_a <= std::pow(2.0, 3.0)); // factor 2^{alpha+1} window around 1
    for (const SlopeRow& row : rep.rows) {
        REQUIRE(std::isfinite(row.extracted_c));
        REQUIRE(row.rhs_bound > 0.0);
    }
    // geometric-decay inverse: spot-check the closed form on the last row
    GraphPtr c = build_cycle(512);
    const InvertResult inv = invert(successor_damping(c, 0.9));
    for (int j : {0, 5, 100})
        REQUIRE(inv.inverse(0, j) ==
                Catch::Approx(oracle::cycle_damping_inverse_entry(0, j, 512, 0.9)).margin(1e-12));
}
