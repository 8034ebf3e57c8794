#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beurling/errors.hpp"
#include "beurling/graph.hpp"
#include "beurling/rng.hpp"

namespace beurling {

/// Parameters of the decay norm: summability exponent r in [1, inf]
/// (infinity selects the sup form), decay rate alpha >= 0, and the growth
/// dimension used in the exponent. `dim` comes from GrowthStats or a
/// generator override; it is explicit because no canonical choice exists on
/// a finite graph.
struct BeurlingParams {
    double r = 1.0;
    double alpha = 0.0;
    double dim = 1.0;

    bool sup_form() const { return std::isinf(r); }
    /// 1/r' = 1 - 1/r; returns r' (infinity when r = 1).
    double conjugate() const {
        if (r == 1.0) return std::numeric_limits<double>::infinity();
        if (sup_form()) return 1.0;
        return r / (r - 1.0);
    }
    /// 1 - 1/r, the exponent showing up in most constants.
    double one_minus_inv_r() const { return sup_form() ? 1.0 : 1.0 - 1.0 / r; }

    void validate() const {
        if (!(r >= 1.0)) throw argument_error("norm exponent r must be >= 1");
        if (!(alpha >= 0.0)) throw argument_error("decay rate alpha must be >= 0");
    }
};

/// Dense matrix indexed by graph vertices, with its decay profile
/// h(n) = max_{dist(i,j) >= n} |a(i,j)| cached at construction (h is
/// non-increasing; the max over an empty set is 0). Immutable.
class LocalizedMatrix {
public:
    LocalizedMatrix(GraphPtr graph, std::vector<double> entries)
        : g_(std::move(graph)), a_(std::move(entries)) {
        const std::size_t n = static_cast<std::size_t>(g_->size());
        if (a_.size() != n * n) throw argument_error("matrix size does not match graph");
        compute_profile();
    }

    const Graph& graph() const { return *g_; }
    GraphPtr graph_ptr() const { return g_; }
    int size() const { return g_->size(); }

    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * size() + j]; }
    const std::vector<double>& entries() const { return a_; }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * size(); }

    /// h(n) for any n >= 0 (zero beyond the diameter).
    double profile(long long n) const {
        if (n < 0) throw argument_error("profile index must be >= 0");
        if (n >= static_cast<long long>(profile_.size())) return 0.0;
        return profile_[static_cast<std::size_t>(n)];
    }
    const std::vector<double>& profile_values() const { return profile_; }

private:
    void compute_profile() {
        const int n = size();
        profile_.assign(static_cast<std::size_t>(g_->diameter()) + 1, 0.0);
        for (int i = 0; i < n; ++i) {
            const std::int32_t* drow = g_->dist_row(i);
            const double* arow = row(i);
            for (int j = 0; j < n; ++j) {
                const double v = std::abs(arow[j]);
                if (v > profile_[drow[j]]) profile_[drow[j]] = v;
            }
        }
        for (int k = static_cast<int>(profile_.size()) - 2; k >= 0; --k)
            profile_[k] = std::max(profile_[k], profile_[k + 1]);
    }

    GraphPtr g_;
    std::vector<double> a_;
    std::vector<double> profile_;
};

/// Decay norm of the profile: (sum_n h(n)^r (n+1)^{alpha r + dim - 1})^{1/r},
/// or sup_n h(n) (n+1)^alpha when r = inf. The sum stops at the diameter
/// because the profile vanishes beyond it.
inline double beurling_norm(const LocalizedMatrix& A, const BeurlingParams& prm) {
    prm.validate();
    const auto& h = A.profile_values();
    if (prm.sup_form()) {
        double best = 0.0;
        for (std::size_t n = 0; n < h.size(); ++n)
            best = std::max(best, h[n] * std::pow(n + 1.0, prm.alpha));
        return best;
    }
    double s = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) {
        if (h[n] == 0.0) continue;
        s += std::pow(h[n], prm.r) * std::pow(n + 1.0, prm.alpha * prm.r + prm.dim - 1.0);
    }
    return std::pow(s, 1.0 / prm.r);
}

/// Bandwidth-K truncation: entries at distance > K are zeroed.
inline LocalizedMatrix truncate(const LocalizedMatrix& A, int K) {
    if (K < 1) throw argument_error("truncation bandwidth must be >= 1");
    const int n = A.size();
    std::vector<double> out(A.entries());
    for (int i = 0; i < n; ++i) {
        const std::int32_t* drow = A.graph().dist_row(i);
        double* arow = out.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j)
            if (drow[j] > K) arow[j] = 0.0;
    }
    return LocalizedMatrix(A.graph_ptr(), std::move(out));
}

/// Entrywise |difference| of two matrices on the same graph; A*B as matrices.
inline LocalizedMatrix matrix_difference(const LocalizedMatrix& A, const LocalizedMatrix& B) {
    const int n = A.size();
    if (B.size() != n) throw argument_error("matrix sizes differ");
    std::vector<double> out(A.entries());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= B.entries()[k];
    return LocalizedMatrix(A.graph_ptr(), std::move(out));
}

// --- builders -------------------------------------------------------------

inline LocalizedMatrix identity_matrix(GraphPtr g) {
    const int n = g->size();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1.0;
    return LocalizedMatrix(std::move(g), std::move(a));
}

inline LocalizedMatrix scalar_matrix(GraphPtr g, double t) {
    const int n = g->size();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = t;
    return LocalizedMatrix(std::move(g), std::move(a));
}

/// 1 on the diagonal, -kappa at each vertex's forward successor. Defined for
/// linearly ordered graphs: 1-d lattices (i -> i+1, none at the end) and
/// cycles (i -> i+1 mod n).
inline LocalizedMatrix successor_damping(GraphPtr g, double kappa) {
    const int n = g->size();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    bool cycle;
    if (g->kind() == "circulant" && g->params() == "n=" + std::to_string(n) + ",jumps=1")
        cycle = true;
    else if (g->kind() == "lattice" && g->params().find("d=1,") == 0)
        cycle = false;
    else
        throw argument_error("successor damping needs a path or a cycle");
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = 1.0;
        if (cycle || i + 1 < n) a[static_cast<std::size_t>(i) * n + (i + 1) % n] = -kappa;
    }
    return LocalizedMatrix(std::move(g), std::move(a));
}

/// I - kappa * Deg^{-1} Adj: strictly diagonally dominant for kappa < 1,
/// bandwidth 1. The generic stand-in for successor damping on graphs without
/// a linear order.
inline LocalizedMatrix neighbor_averaging_damping(GraphPtr g, double kappa) {
    const int n = g->size();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = 1.0;
        const auto& nb = g->neighbors(i);
        for (int j : nb) a[static_cast<std::size_t>(i) * n + j] = -kappa / static_cast<double>(nb.size());
    }
    return LocalizedMatrix(std::move(g), std::move(a));
}

/// Seeded dense matrix with unit diagonal and off-diagonal magnitudes
/// uniform in [0.5, 1] times scale * (dist(i,j)+1)^{-decay}, random signs.
/// The default scale keeps rows diagonally dominant on the graphs this
/// project targets, so instances stay invertible.
inline LocalizedMatrix random_decay_matrix(GraphPtr g, double decay, std::uint64_t seed,
                                           double scale = 0.15) {
    const int n = g->size();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        const std::int32_t* drow = g->dist_row(i);
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                a[static_cast<std::size_t>(i) * n + j] = 1.0;
                continue;
            }
            const double mag = (0.5 + 0.5 * uniform01(rng)) * scale * std::pow(drow[j] + 1.0, -decay);
            a[static_cast<std::size_t>(i) * n + j] = (uniform01(rng) < 0.5 ? -mag : mag);
        }
    }
    return LocalizedMatrix(std::move(g), std::move(a));
}

} // namespace beurling
