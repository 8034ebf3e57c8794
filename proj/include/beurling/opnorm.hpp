#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "beurling/linalg.hpp"
#include "beurling/localized_matrix.hpp"
#include "beurling/rng.hpp"
#include "beurling/weight.hpp"

namespace beurling {

enum class NormMethod { exact_p1, exact_p2, boyd_plus_interp };

/// Certified interval for an operator norm. Exact methods give lower == upper.
struct NormInterval {
    double lower = 0.0;
    double upper = 0.0;
    NormMethod method = NormMethod::exact_p1;
};

struct OpNormOptions {
    int boyd_restarts = 50;
    int boyd_max_iters = 200;
    double boyd_tol = 1e-12;
    std::uint64_t seed = 20240901;
    int dense_spectral_threshold = 600; // above this, p=2 uses Lanczos
    int lanczos_max_steps = 400;
    double lanczos_tol = 1e-12;
};

namespace detail {

/// Conjugated matrix D_w^{1/p} A D_w^{-1/p}; its unweighted p->p norm equals
/// the weighted norm of A.
inline RowMajorMatrix conjugated(const LocalizedMatrix& A, double p, const Weight& w) {
    const int n = A.size();
    RowMajorMatrix M(n, n);
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = std::pow(w(i), 1.0 / p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = s[i] * A(i, j) / s[j];
    return M;
}

inline double max_abs_col_sum(const RowMajorMatrix& M) {
    double best = 0.0;
    for (int j = 0; j < M.cols(); ++j) best = std::max(best, M.col(j).cwiseAbs().sum());
    return best;
}

inline double max_abs_row_sum(const RowMajorMatrix& M) {
    double best = 0.0;
    for (int i = 0; i < M.rows(); ++i) best = std::max(best, M.row(i).cwiseAbs().sum());
    return best;
}

/// Largest singular value. Dense symmetric eigensolve of M^T M for moderate
/// sizes; Lanczos with full reorthogonalization for large ones (the
/// conjugated inverses this project meets have tiny spectral gaps, where
/// plain power iteration stalls).
inline double spectral_norm(const RowMajorMatrix& M, const OpNormOptions& opt) {
    const int n = static_cast<int>(M.rows());
    if (n <= opt.dense_spectral_threshold) {
        Eigen::MatrixXd G = M.transpose() * M;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
        return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    const int m_max = std::min(opt.lanczos_max_steps, n);
    std::mt19937_64 rng(opt.seed);
    Eigen::MatrixXd Q(n, m_max + 1);
    Eigen::VectorXd alpha(m_max), beta(m_max);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * gaussian(rng);
    v.normalize();
    Q.col(0) = v;
    double prev_ritz = 0.0;
    int m = 0;
    for (int k = 0; k < m_max; ++k) {
        Eigen::VectorXd w = M.transpose() * (M * Q.col(k));
        alpha[k] = Q.col(k).dot(w);
        w.noalias() -= Q.leftCols(k + 1) * (Q.leftCols(k + 1).transpose() * w);
        w.noalias() -= Q.leftCols(k + 1) * (Q.leftCols(k + 1).transpose() * w); // second pass
        beta[k] = w.norm();
        m = k + 1;
        if (beta[k] <= 1e-300) break; // invariant subspace found
        Q.col(k + 1) = w / beta[k];
        if ((k + 1) % 10 == 0 || k + 1 == m_max) {
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                T(i, i) = alpha[i];
                if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
            const double ritz = es.eigenvalues().maxCoeff();
            if (ritz > 0.0 && std::abs(ritz - prev_ritz) <= opt.lanczos_tol * ritz) {
                prev_ritz = ritz;
                break;
            }
            prev_ritz = ritz;
        }
    }
    if (m > 0 && prev_ritz == 0.0) {
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
        prev_ritz = es.eigenvalues().maxCoeff();
    }
    return std::sqrt(std::max(0.0, prev_ritz));
}

inline double lp_norm(const Eigen::VectorXd& v, double p) {
    double s = 0.0;
    for (int i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
    return std::pow(s, 1.0 / p);
}

// psi_p(t) = sign(t) |t|^{p-1}, applied entrywise.
inline Eigen::VectorXd dual_signed_power(const Eigen::VectorXd& v, double p) {
    Eigen::VectorXd out(v.size());
    for (int i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        out[i] = (v[i] < 0 ? -1.0 : 1.0) * std::pow(a, p - 1.0);
    }
    return out;
}

/// Boyd's fixed-point iteration for ||M||_{p->p}. Each iterate's Rayleigh-type
/// quotient is a valid lower bound and is nondecreasing; restarts guard
/// against bad starting vectors.
inline double boyd_lower_bound(const RowMajorMatrix& M, double p, const OpNormOptions& opt) {
    const int n = static_cast<int>(M.rows());
    const double pp = p / (p - 1.0);
    std::mt19937_64 rng(opt.seed);
    double best = 0.0;
    for (int restart = 0; restart < opt.boyd_restarts; ++restart) {
        Eigen::VectorXd x(n);
        if (restart == 0)
            x.setOnes();
        else if (restart == 1)
            for (int i = 0; i < n; ++i) x[i] = (i % 2 ? -1.0 : 1.0);
        else
            for (int i = 0; i < n; ++i) x[i] = gaussian(rng);
        double xn = lp_norm(x, p);
        if (xn == 0.0) continue;
        x /= xn;
        double gamma = 0.0;
        for (int it = 0; it < opt.boyd_max_iters; ++it) {
            Eigen::VectorXd y = M * x;
            const double g = lp_norm(y, p);
            if (g <= gamma * (1.0 + opt.boyd_tol) && it > 1) {
                gamma = std::max(gamma, g);
                break;
            }
            gamma = std::max(gamma, g);
            Eigen::VectorXd z = M.transpose() * dual_signed_power(y, p);
            x = dual_signed_power(z, pp);
            const double nx = lp_norm(x, p);
            if (nx == 0.0) break;
            x /= nx;
        }
        best = std::max(best, gamma);
    }
    return best;
}

inline NormInterval operator_norm_conjugated(const RowMajorMatrix& M, double p, const OpNormOptions& opt) {
    NormInterval out;
    if (p == 1.0) {
        out.lower = out.upper = max_abs_col_sum(M);
        out.method = NormMethod::exact_p1;
    } else if (p == 2.0) {
        out.lower = out.upper = spectral_norm(M, opt);
        out.method = NormMethod::exact_p2;
    } else {
        out.method = NormMethod::boyd_plus_interp;
        out.lower = boyd_lower_bound(M, p, opt);
        // Riesz-Thorin between the exact 1 -> 1 and inf -> inf endpoints
        const double n1 = max_abs_col_sum(M);
        const double ninf = max_abs_row_sum(M);
        out.upper = std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p);
        out.upper = std::max(out.upper, out.lower);
    }
    return out;
}

} // namespace detail

/// Norm of A as an operator on the weighted sequence space with exponent p,
/// via the exact identity with the conjugated matrix. p = 1 and p = 2 are
/// exact; other exponents return a certified interval.
inline NormInterval operator_norm(const LocalizedMatrix& A, double p, const Weight& w,
                                  const OpNormOptions& opt = {}) {
    if (!(p >= 1.0) || std::isinf(p)) throw argument_error("operator norm needs p in [1, inf)");
    const RowMajorMatrix M = detail::conjugated(A, p, w);
    return detail::operator_norm_conjugated(M, p, opt);
}

} // namespace beurling
