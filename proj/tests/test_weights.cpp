#include <catch2/catch_amalgamated.hpp>

#include "beurling/graph.hpp"
#include "beurling/growth.hpp"
#include "beurling/rng.hpp"
#include "beurling/weight.hpp"
#include "oracles.hpp"

using namespace beurling;

namespace {

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
    std::vector<std::vector<int>> adj(g.size());
    for (int v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

} // namespace

TEST_CASE("polynomial weight values") {
    GraphPtr p9 = build_path(9);
    const Weight w0 = polynomial_weight(p9, 4, 0.0);
    for (int v = 0; v < 9; ++v) REQUIRE(w0(v) == 1.0);

    const Weight w1 = polynomial_weight(p9, 4, 1.0);
    const std::vector<double> expect{5, 4, 3, 2, 1, 2, 3, 4, 5};
    for (int v = 0; v < 9; ++v) REQUIRE(w1(v) == Catch::Approx(expect[v]));

    REQUIRE_THROWS_AS(polynomial_weight(p9, 4, -1.0), argument_error);
    REQUIRE_THROWS_AS(explicit_weight(p9, std::vector<double>(9, 0.0)), argument_error);
    REQUIRE_THROWS_AS(explicit_weight(p9, std::vector<double>(9, 1e-310)), argument_error);
}

TEST_CASE("weighted norm") {
    GraphPtr p9 = build_path(9);
    const Weight wt = polynomial_weight(p9, 4, 0.5);
    for (double p : {1.0, 1.5, 2.0}) {
        std::vector<double> e(9, 0.0);
        e[3] = 1.0;
        REQUIRE(weighted_norm(e, p, wt) == Catch::Approx(std::pow(wt(3), 1.0 / p)));
    }
    const Weight w0 = trivial_weight(p9);
    REQUIRE(weighted_norm(std::vector<double>(9, 1.0), 1.0, w0) == Catch::Approx(9.0));

    std::mt19937_64 rng(5);
    std::vector<double> c(9);
    for (double& x : c) x = gaussian(rng);
    REQUIRE(weighted_norm(c, 2.0, wt) ==
            Catch::Approx(oracle::weighted_norm_naive(c, 2.0, wt.values())).epsilon(1e-14));
}

TEST_CASE("trivial weight has unit Muckenhoupt bound") {
    for (GraphPtr g : {build_path(9), build_cycle(16), build_lattice(2, 4)}) {
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const ApReport rep = ap_bound(trivial_weight(g), p);
            REQUIRE(rep.bound == Catch::Approx(1.0));
        }
    }
}

TEST_CASE("Muckenhoupt bound matches the exhaustive oracle") {
    GraphPtr p9 = build_path(9); // vertices are Z-offsets -4..4 around base 4
    const Weight wt = polynomial_weight(p9, 4, 0.5);
    const auto fw = oracle::floyd_warshall(adjacency_of(*p9));
    for (double p : {1.0, 1.5, 2.0}) {
        const ApReport rep = ap_bound(wt, p);
        REQUIRE(rep.bound ==
                Catch::Approx(oracle::ap_bound_naive(fw, wt.values(), p, p9->diameter())).epsilon(1e-12));
        REQUIRE(rep.bound > 1.0);
        REQUIRE(std::isfinite(rep.bound));
    }
    // the witness ball attains the bound
    const ApReport rep = ap_bound(wt, 2.0);
    double sw = 0.0, sd = 0.0;
    int m = 0;
    for (int v : p9->ball(rep.witness_center, rep.witness_radius)) {
        sw += wt(v);
        sd += 1.0 / wt(v);
        ++m;
    }
    REQUIRE((sw / m) * (sd / m) == Catch::Approx(rep.bound));
}

TEST_CASE("Muckenhoupt bound is non-increasing in p") {
    for (GraphPtr g : {build_path(17), build_cycle(16)}) {
        for (double theta : {0.5, -0.4, 1.0}) {
            const Weight wt = polynomial_weight(g, 0, theta);
            double prev = std::numeric_limits<double>::infinity();
            for (double p : {1.0, 1.5, 2.0, 3.0}) {
                const double b = ap_bound(wt, p).bound;
                REQUIRE(b <= prev * (1.0 + 1e-12));
                prev = b;
            }
        }
    }
}

TEST_CASE("Muckenhoupt bound growth across theta") {
    // theta inside the admissible window stays flat across sizes; theta beyond
    // p - 1 grows with the cycle
    double inside_prev = 0.0, outside_prev = 0.0;
    for (int n : {16, 32, 64}) {
        GraphPtr g = build_cycle(n);
        const double inside = ap_bound(polynomial_weight(g, 0, 0.3), 2.0).bound;
        const double outside = ap_bound(polynomial_weight(g, 0, 1.5), 2.0).bound;
        REQUIRE(std::isfinite(inside));
        if (n > 16) {
            REQUIRE(inside <= inside_prev * 1.5);
            REQUIRE(outside > outside_prev * 1.2);
        }
        inside_prev = inside;
        outside_prev = outside;
    }
}

TEST_CASE("characterization ratio never exceeds the bound") {
    GraphPtr p9 = build_path(9);
    const Weight w0 = trivial_weight(p9);
    std::vector<double> ind(9, 0.0);
    ind[2] = 1.0;
    REQUIRE(ap_char_ratio(w0, 2.0, ind) <= 1.0 + 1e-12);

    std::vector<double> cst(9, 3.0);
    REQUIRE(ap_char_ratio(w0, 2.0, cst) == Catch::Approx(1.0));

    const Weight wt = polynomial_weight(p9, 4, 0.5);
    std::mt19937_64 rng(11);
    for (double p : {1.0, 1.5, 2.0}) {
        const double bound = ap_bound(wt, p).bound;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> c = gaussian_vector(rng, 9);
            REQUIRE(ap_char_ratio(wt, p, c) <= bound + 1e-12);
        }
    }
    REQUIRE_THROWS_AS(ap_char_ratio(w0, 2.0, std::vector<double>(9, 0.0)), argument_error);
}

TEST_CASE("weighted doubling inequality") {
    {
        GraphPtr g = build_path(17);
        const double D = doubling_constant(*g);
        const VerificationReport r0 = weighted_doubling_check(trivial_weight(g), 1.5, D);
        REQUIRE(r0.pass);
        REQUIRE(r0.slack >= 1.0);
        const VerificationReport r1 = weighted_doubling_check(polynomial_weight(g, 0, 0.5), 2.0, D);
        REQUIRE(r1.pass);
    }
    {
        GraphPtr g = build_cycle(16);
        const VerificationReport r2 =
            weighted_doubling_check(polynomial_weight(g, 0, -0.5), 2.0, doubling_constant(*g));
        REQUIRE(r2.pass);
    }
}

TEST_CASE("weighted norm vanishes only at zero") {
    GraphPtr p9 = build_path(9);
    const Weight wt = polynomial_weight(p9, 4, 0.5);
    REQUIRE(weighted_norm(std::vector<double>(9, 0.0), 1.5, wt) == 0.0);
    std::vector<double> c(9, 0.0);
    c[7] = 1e-12;
    REQUIRE(weighted_norm(c, 1.5, wt) > 0.0);
}
