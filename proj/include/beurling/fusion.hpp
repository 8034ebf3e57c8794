#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "beurling/disjoint.hpp"
#include "beurling/errors.hpp"
#include "beurling/localized_matrix.hpp"

namespace beurling {

/// Dense matrix indexed by the members of a maximal N-disjoint set.
class FusionMatrix {
public:
    FusionMatrix(DisjointSet vn, std::vector<double> entries)
        : vn_(std::move(vn)), b_(std::move(entries)) {
        const std::size_t m = static_cast<std::size_t>(vn_.count());
        if (b_.size() != m * m) throw argument_error("fusion matrix size does not match member count");
    }

    const DisjointSet& fusion_set() const { return vn_; }
    int count() const { return vn_.count(); }
    long long N() const { return vn_.N; }
    double operator()(int i, int j) const { return b_[static_cast<std::size_t>(i) * count() + j]; }
    const std::vector<double>& entries() const { return b_; }

    /// Member-to-member geodesic distance.
    int member_dist(int i, int j) const {
        return vn_.graph->dist(vn_.members[i], vn_.members[j]);
    }

    /// Banded profile h(n) = max over member pairs at distance >= n(N+1) of |b|.
    std::vector<double> banded_profile() const {
        const int m = count();
        const long long band = vn_.N + 1;
        const long long nmax = vn_.graph->diameter() / band;
        std::vector<double> h(static_cast<std::size_t>(nmax) + 1, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const long long bucket = member_dist(i, j) / band;
                const double v = std::abs((*this)(i, j));
                if (v > h[static_cast<std::size_t>(bucket)]) h[static_cast<std::size_t>(bucket)] = v;
            }
        for (int k = static_cast<int>(h.size()) - 2; k >= 0; --k) h[k] = std::max(h[k], h[k + 1]);
        return h;
    }

private:
    DisjointSet vn_;
    std::vector<double> b_;
};

/// Decay norm on the fusion set: bands of width N+1 replace unit rings, and
/// the strong growth dimension replaces the plain one in the exponent.
inline double fusion_norm(const FusionMatrix& B, double r, double alpha_tilde, double strong_dim) {
    if (!(r >= 1.0)) throw argument_error("norm exponent r must be >= 1");
    const std::vector<double> h = B.banded_profile();
    if (std::isinf(r)) {
        double best = 0.0;
        for (std::size_t n = 0; n < h.size(); ++n)
            best = std::max(best, h[n] * std::pow(n + 1.0, alpha_tilde));
        return best;
    }
    double s = 0.0;
    for (std::size_t n = 0; n < h.size(); ++n) {
        if (h[n] == 0.0) continue;
        s += std::pow(h[n], r) * std::pow(n + 1.0, alpha_tilde * r + strong_dim - 1.0);
    }
    return std::pow(s, 1.0 / r);
}

inline FusionMatrix fusion_identity(DisjointSet vn) {
    const int m = vn.count();
    std::vector<double> b(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i) * m + i] = 1.0;
    return FusionMatrix(std::move(vn), std::move(b));
}

inline FusionMatrix fusion_product(const FusionMatrix& A, const FusionMatrix& B) {
    const int m = A.count();
    if (B.count() != m) throw argument_error("fusion matrix sizes differ");
    std::vector<double> out(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(i) * m + j] += aik * B(k, j);
        }
    return FusionMatrix(A.fusion_set(), std::move(out));
}

/// Entrywise restriction of a graph matrix to the fusion set.
inline FusionMatrix restrict_to_fusion(const LocalizedMatrix& A, const DisjointSet& vn) {
    const int m = vn.count();
    std::vector<double> b(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            b[static_cast<std::size_t>(i) * m + j] = A(vn.members[i], vn.members[j]);
    return FusionMatrix(vn, std::move(b));
}

/// Lift of a fusion matrix back to the graph:
/// A(v, v') = sum over members m in B(v, 2N), k in B(v', 4N) of b(m, k).
inline LocalizedMatrix lift_from_fusion(const FusionMatrix& B) {
    const DisjointSet& vn = B.fusion_set();
    const Graph& g = *vn.graph;
    const int n = g.size();
    const int m = vn.count();
    const long long N = vn.N;
    // indicator tables rows: dist(v, member) <= 2N, cols: <= 4N
    std::vector<std::vector<int>> rows(n), cols(n);
    for (int v = 0; v < n; ++v) {
        const std::int32_t* drow = g.dist_row(v);
        for (int k = 0; k < m; ++k) {
            const int d = drow[vn.members[k]];
            if (d <= 2 * N) rows[v].push_back(k);
            if (d <= 4 * N) cols[v].push_back(k);
        }
    }
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    // intermediate: t(v', k_row) = sum over cols(v') of b(k_row, .)
    std::vector<double> t(static_cast<std::size_t>(n) * m, 0.0);
    for (int vp = 0; vp < n; ++vp)
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            for (int k : cols[vp]) s += B(i, k);
            t[static_cast<std::size_t>(vp) * m + i] = s;
        }
    for (int v = 0; v < n; ++v)
        for (int vp = 0; vp < n; ++vp) {
            double s = 0.0;
            const double* trow = t.data() + static_cast<std::size_t>(vp) * m;
            for (int i : rows[v]) s += trow[i];
            a[static_cast<std::size_t>(v) * n + vp] = s;
        }
    return LocalizedMatrix(vn.graph, std::move(a));
}

/// Envelope matrix on the fusion set dominating the commutator blocks of A:
/// far pairs (dist > 12(N+1)) get N^dim * h(dist/2), near pairs get
/// N^{-1} sum_{n<=2N} h(n)(n+1)^dim. The profile at half-integers uses the
/// ceiling, the conservative choice for a non-increasing profile.
inline FusionMatrix commutator_envelope(const LocalizedMatrix& A, const DisjointSet& vn, double dim) {
    if (vn.N < 1) throw argument_error("commutator envelope needs N >= 1");
    const int m = vn.count();
    const long long N = vn.N;
    double near = 0.0;
    for (long long n = 0; n <= 2 * N && n <= A.graph().diameter(); ++n)
        near += A.profile(n) * std::pow(n + 1.0, dim);
    near /= static_cast<double>(N);
    const double npow = std::pow(static_cast<double>(N), dim);
    std::vector<double> b(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const long long d = vn.graph->dist(vn.members[i], vn.members[j]);
            b[static_cast<std::size_t>(i) * m + j] =
                d > 12 * (N + 1) ? npow * A.profile((d + 1) / 2) : near;
        }
    return FusionMatrix(vn, std::move(b));
}

} // namespace beurling
