#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "beurling/fusion.hpp"
#include "beurling/linalg.hpp"
#include "beurling/localized_matrix.hpp"
#include "beurling/opnorm.hpp"
#include "beurling/report.hpp"
#include "beurling/rng.hpp"
#include "beurling/stability.hpp"
#include "beurling/weight.hpp"

namespace beurling {

// Every check in this header verifies a displayed inequality by computing
// both sides on the actual matrices. They are theorems under the growth
// hypotheses, so a failure means an implementation defect.

/// ||A - A_K||_{1,0} <= C0 ||A||_{r,alpha} K^{-alpha + d(1-1/r)}.
inline VerificationReport truncation_error_check(const LocalizedMatrix& A, const AlgebraContext& ctx,
                                                 int K, const InstanceInfo& info = {}) {
    const BeurlingParams& prm = ctx.prm;
    const double q = prm.one_minus_inv_r();
    if (q > 0.0 && !(prm.alpha > prm.dim * q))
        throw precondition_error("truncation-tail check needs alpha > dim (1 - 1/r)");
    BeurlingParams b10{1.0, 0.0, prm.dim};
    const double lhs = beurling_norm(matrix_difference(A, truncate(A, K)), b10);
    const double rhs = truncation_constant(prm) * beurling_norm(A, prm) *
                       std::pow(static_cast<double>(K), -prm.alpha + prm.dim * q);
    VerificationReport rep;
    rep.check_id = "truncation-tail/K=" + std::to_string(K);
    rep.inequality_id = "truncation-tail";
    rep.instance = info;
    finish_fixed_constant(rep, lhs, rhs);
    return rep;
}

enum class ProductInequality { banach_b10, banach_ralpha, embedding };

/// Algebra inequalities on the graph: the (1,0) product bound, the
/// (r, alpha) product bound, and the embedding into the (1,0) norm.
inline VerificationReport product_inequality_check(const LocalizedMatrix& A, const LocalizedMatrix& B,
                                                   const AlgebraContext& ctx, ProductInequality kind,
                                                   const InstanceInfo& info = {}) {
    const BeurlingParams& prm = ctx.prm;
    BeurlingParams b10{1.0, 0.0, prm.dim};
    VerificationReport rep;
    rep.instance = info;
    double lhs = 0.0, rhs = 0.0;
    switch (kind) {
        case ProductInequality::banach_b10:
            rep.inequality_id = "product-b10";
            lhs = beurling_norm(matrix_product(A, B), b10);
            rhs = b10_product_constant(prm.dim, ctx.density) * beurling_norm(A, b10) * beurling_norm(B, b10);
            break;
        case ProductInequality::banach_ralpha:
            rep.inequality_id = "product-bra";
            lhs = beurling_norm(matrix_product(A, B), prm);
            rhs = product_constant(prm, ctx.density) * beurling_norm(A, prm) * beurling_norm(B, prm);
            break;
        case ProductInequality::embedding:
            rep.inequality_id = "embedding-b10";
            lhs = beurling_norm(A, b10);
            rhs = embedding_constant(prm) * beurling_norm(A, prm);
            break;
    }
    rep.check_id = rep.inequality_id;
    finish_fixed_constant(rep, lhs, rhs);
    return rep;
}

/// Restriction to a fusion set does not increase the norm (with the shifted
/// decay rate alpha - (strong_dim - dim)/r).
inline VerificationReport fusion_restrict_check(const LocalizedMatrix& A, const DisjointSet& vn,
                                                const AlgebraContext& ctx, const InstanceInfo& info = {}) {
    const double ta = ctx.strong_alpha();
    if (!(ta >= 0.0)) throw precondition_error("fusion restriction needs alpha >= (strong_dim - dim)/r");
    const FusionMatrix B = restrict_to_fusion(A, vn);
    VerificationReport rep;
    rep.check_id = "fusion-restrict";
    rep.inequality_id = "fusion-restrict";
    rep.instance = info;
    rep.instance.N = vn.N;
    finish_fixed_constant(rep, fusion_norm(B, ctx.prm.r, ta, ctx.strong_dim), beurling_norm(A, ctx.prm));
    return rep;
}

/// Lifting a fusion matrix back to the graph:
/// ||lift(B)||_{r, ta + (strong_dim - dim)/r} <= 8^{ta + strong_dim/r} D(mu)^7 N^{ta + strong_dim/r} ||B||.
inline VerificationReport fusion_lift_check(const FusionMatrix& B, const AlgebraContext& ctx,
                                            double doubling_const, const InstanceInfo& info = {}) {
    const double ta = ctx.strong_alpha();
    if (!(ta >= 0.0)) throw precondition_error("fusion lift needs alpha >= (strong_dim - dim)/r");
    const double inv_r = ctx.prm.sup_form() ? 0.0 : 1.0 / ctx.prm.r;
    const LocalizedMatrix lifted = lift_from_fusion(B);
    const double lhs = beurling_norm(lifted, ctx.prm);
    const double e = ta + ctx.strong_dim * inv_r;
    const double rhs = std::pow(8.0, e) * std::pow(doubling_const, 7.0) *
                       std::pow(static_cast<double>(B.N()), e) *
                       fusion_norm(B, ctx.prm.r, ta, ctx.strong_dim);
    VerificationReport rep;
    rep.check_id = "fusion-lift";
    rep.inequality_id = "fusion-lift";
    rep.instance = info;
    rep.instance.N = B.N();
    finish_fixed_constant(rep, lhs, rhs);
    return rep;
}

/// The commutator envelope's fusion norm against its displayed bound.
inline VerificationReport envelope_norm_check(const LocalizedMatrix& A, const DisjointSet& vn,
                                              const AlgebraContext& ctx, const InstanceInfo& info = {}) {
    const BeurlingParams& prm = ctx.prm;
    if (!(prm.alpha > prm.dim * prm.one_minus_inv_r()))
        throw precondition_error("envelope norm check needs alpha > dim (1 - 1/r)");
    const FusionMatrix S = commutator_envelope(A, vn, prm.dim);
    const double lhs = fusion_norm(S, prm.r, ctx.strong_alpha(), ctx.strong_dim);
    const double rhs = envelope_norm_bound(prm, beurling_norm(A, prm), static_cast<double>(vn.N));
    VerificationReport rep;
    rep.check_id = "envelope-norm";
    rep.inequality_id = "envelope-norm";
    rep.instance = info;
    rep.instance.N = vn.N;
    finish_fixed_constant(rep, lhs, rhs);
    return rep;
}

enum class FusionProductInequality { banach_b10, banach_ralpha, embedding };

/// Algebra inequalities on a fusion set.
inline VerificationReport fusion_product_inequality_check(const FusionMatrix& A, const FusionMatrix& B,
                                                          const AlgebraContext& ctx,
                                                          FusionProductInequality kind,
                                                          const InstanceInfo& info = {}) {
    const double r = ctx.prm.r;
    const double ta = ctx.strong_alpha();
    const double td = ctx.strong_dim;
    VerificationReport rep;
    rep.instance = info;
    rep.instance.N = A.N();
    double lhs = 0.0, rhs = 0.0;
    switch (kind) {
        case FusionProductInequality::banach_b10:
            rep.inequality_id = "fusion-product-b10";
            lhs = fusion_norm(fusion_product(A, B), 1.0, 0.0, td);
            rhs = fusion_b10_product_constant(td, ctx.strong_density) * fusion_norm(A, 1.0, 0.0, td) *
                  fusion_norm(B, 1.0, 0.0, td);
            break;
        case FusionProductInequality::banach_ralpha:
            rep.inequality_id = "fusion-product-bra";
            lhs = fusion_norm(fusion_product(A, B), r, ta, td);
            rhs = fusion_product_constant(r, ta, td, ctx.strong_density) * fusion_norm(A, r, ta, td) *
                  fusion_norm(B, r, ta, td);
            break;
        case FusionProductInequality::embedding:
            rep.inequality_id = "fusion-embedding";
            lhs = fusion_norm(A, 1.0, 0.0, td);
            rhs = fusion_embedding_constant(r, ta, td) * fusion_norm(A, r, ta, td);
            break;
    }
    rep.check_id = rep.inequality_id;
    finish_fixed_constant(rep, lhs, rhs);
    return rep;
}

struct BoundednessCheckOptions {
    int batch = 200;
    std::uint64_t seed = 5407;
};

/// Weighted boundedness: ||A c||_{p,w} <= 2^{3d} D_G (A_p)^{1/p} ||A||_{1,0} ||c||_{p,w},
/// probed on a Gaussian batch and, for p in {1, 2}, on the exact operator norm.
inline VerificationReport weighted_boundedness_check(const LocalizedMatrix& A, double p, const Weight& w,
                                                     const AlgebraContext& ctx, double ap,
                                                     const BoundednessCheckOptions& opt = {},
                                                     const InstanceInfo& info = {}) {
    const int n = A.size();
    BeurlingParams b10{1.0, 0.0, ctx.prm.dim};
    const double cst = std::pow(2.0, 3.0 * ctx.prm.dim) * ctx.density * std::pow(ap, 1.0 / p) *
                       beurling_norm(A, b10);
    double lhs = 0.0;
    std::mt19937_64 rng(opt.seed);
    std::vector<double> c(n);
    for (int b = 0; b < opt.batch; ++b) {
        for (double& x : c) x = gaussian(rng);
        const double nc = weighted_norm(c, p, w);
        if (nc == 0.0) continue;
        lhs = std::max(lhs, weighted_norm(matvec(A, c), p, w) / nc);
    }
    if (p == 1.0 || p == 2.0) lhs = std::max(lhs, operator_norm(A, p, w).upper);
    VerificationReport rep;
    rep.check_id = "weighted-bound";
    rep.inequality_id = "weighted-bound";
    rep.instance = info;
    rep.seed = opt.seed;
    finish_fixed_constant(rep, lhs, cst);
    return rep;
}

} // namespace beurling
