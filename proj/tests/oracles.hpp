// Test-side oracles: independent brute-force implementations used to freeze
// expected values. Nothing here may call into the library's computation paths
// it is checking; everything is a direct transcription of a definition.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oracle {

// All-pairs distances by Floyd-Warshall over an adjacency list.
inline std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) d[i][j] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline int ball_size(const std::vector<std::vector<int>>& dist, int center, double radius) {
    int cnt = 0;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[center][v] <= radius) ++cnt;
    return cnt;
}

// Doubling ratio supremum probed on the quarter-step grid r in {0.25, 0.5, ..., diam}.
inline double doubling_quarter_grid(const std::vector<std::vector<int>>& dist, int diam) {
    const int n = static_cast<int>(dist.size());
    double best = 1.0;
    for (int c = 0; c < n; ++c)
        for (int q = 1; q <= 4 * diam; ++q) {
            const double r = q / 4.0;
            best = std::max(best, static_cast<double>(ball_size(dist, c, 2.0 * r)) /
                                      ball_size(dist, c, r));
        }
    return best;
}

// Muckenhoupt bound by direct summation over every (center, radius) ball.
inline double ap_bound_naive(const std::vector<std::vector<int>>& dist, const std::vector<double>& w,
                             double p, int diam) {
    const int n = static_cast<int>(dist.size());
    double best = 0.0;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r <= diam; ++r) {
            double sw = 0.0, sdual = 0.0, mn = std::numeric_limits<double>::infinity();
            int m = 0;
            for (int v = 0; v < n; ++v) {
                if (dist[c][v] > r) continue;
                ++m;
                sw += w[v];
                mn = std::min(mn, w[v]);
                if (p > 1.0) sdual += std::pow(w[v], -1.0 / (p - 1.0));
            }
            const double value = (p == 1.0) ? (sw / m) / mn : (sw / m) * std::pow(sdual / m, p - 1.0);
            best = std::max(best, value);
        }
    return best;
}

inline double weighted_norm_naive(const std::vector<double>& c, double p, const std::vector<double>& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += std::pow(std::abs(c[i]), p) * w[i];
    return std::pow(s, 1.0 / p);
}

// Decay norm by direct summation: the profile at each n is recomputed by a
// full pair scan against the threshold.
inline double beurling_norm_direct(const std::vector<std::vector<int>>& dist,
                                   const std::vector<double>& a, double r, double alpha, double dim,
                                   int diam) {
    const int n = static_cast<int>(dist.size());
    auto h_at = [&](int t) {
        double h = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (dist[i][j] >= t) h = std::max(h, std::abs(a[static_cast<std::size_t>(i) * n + j]));
        return h;
    };
    if (std::isinf(r)) {
        double best = 0.0;
        for (int t = 0; t <= diam; ++t) best = std::max(best, h_at(t) * std::pow(t + 1.0, alpha));
        return best;
    }
    double s = 0.0;
    for (int t = 0; t <= diam; ++t) s += std::pow(h_at(t), r) * std::pow(t + 1.0, alpha * r + dim - 1.0);
    return std::pow(s, 1.0 / r);
}

// Fusion-set decay norm by direct summation over band thresholds n(N+1).
inline double fusion_norm_direct(const std::vector<std::vector<int>>& dist,
                                 const std::vector<int>& members, const std::vector<double>& b,
                                 long long N, double r, double alpha_t, double strong_dim, int diam) {
    const int m = static_cast<int>(members.size());
    auto h_at = [&](long long t) {
        double h = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (dist[members[i]][members[j]] >= t)
                    h = std::max(h, std::abs(b[static_cast<std::size_t>(i) * m + j]));
        return h;
    };
    double s = 0.0, best = 0.0;
    for (long long t = 0; t * (N + 1) <= diam; ++t) {
        const double h = h_at(t * (N + 1));
        if (std::isinf(r))
            best = std::max(best, h * std::pow(t + 1.0, alpha_t));
        else
            s += std::pow(h, r) * std::pow(t + 1.0, alpha_t * r + strong_dim - 1.0);
    }
    return std::isinf(r) ? best : std::pow(s, 1.0 / r);
}

// Eigenvalues of a symmetric matrix by the cyclic Jacobi method (row-major).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-26) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Singular values of a general square matrix via Jacobi on M^T M.
inline std::vector<double> singular_values(const std::vector<double>& mrow, int n) {
    std::vector<double> g(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += mrow[static_cast<std::size_t>(k) * n + i] * mrow[static_cast<std::size_t>(k) * n + j];
            g[static_cast<std::size_t>(i) * n + j] = s;
        }
    std::vector<double> ev = jacobi_eigenvalues(std::move(g), n);
    for (double& v : ev) v = std::sqrt(std::max(0.0, v));
    return ev; // ascending
}

// Closed-form inverse of (I - kappa * forward shift) on a cycle of size n:
// entry (i, j) = kappa^{(j - i) mod n} / (1 - kappa^n).
inline double cycle_damping_inverse_entry(int i, int j, int n, double kappa) {
    const int fwd = ((j - i) % n + n) % n;
    return std::pow(kappa, fwd) / (1.0 - std::pow(kappa, n));
}

} // namespace oracle
