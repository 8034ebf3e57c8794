#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "beurling/errors.hpp"
#include "beurling/linalg.hpp"
#include "beurling/localized_matrix.hpp"

namespace beurling {

struct InvertResult {
    LocalizedMatrix inverse;
    double residual;  // ||A A^{-1} - I|| in the induced inf-norm
    double condition; // reciprocal of the LU rcond estimate
};

/// Dense inverse via partially pivoted LU. Rejects matrices whose estimated
/// condition exceeds `condition_limit` or whose residual exceeds 1e-9.
inline InvertResult invert(const LocalizedMatrix& A, double condition_limit = 1e12) {
    const int n = A.size();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(eigen_view(A));
    const double rcond = lu.rcond();
    if (!(rcond > 0.0) || 1.0 / rcond > condition_limit)
        throw inversion_error("matrix is singular or ill-conditioned (condition estimate " +
                              std::to_string(rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity()) +
                              ")");
    Eigen::MatrixXd inv = lu.inverse();
    std::vector<double> entries(static_cast<std::size_t>(n) * n);
    Eigen::Map<RowMajorMatrix>(entries.data(), n, n) = inv;
    LocalizedMatrix out(A.graph_ptr(), std::move(entries));

    // residual of A * inv - I, exploiting sparsity of A row by row
    double residual = 0.0;
    std::vector<double> rowacc(n);
    for (int i = 0; i < n; ++i) {
        std::fill(rowacc.begin(), rowacc.end(), 0.0);
        const double* arow = A.row(i);
        for (int k = 0; k < n; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = out.row(k);
            for (int j = 0; j < n; ++j) rowacc[j] += aik * brow[j];
        }
        rowacc[i] -= 1.0;
        double s = 0.0;
        for (double v : rowacc) s += std::abs(v);
        residual = std::max(residual, s);
    }
    if (!(residual <= 1e-9))
        throw inversion_error("inverse residual " + std::to_string(residual) + " exceeds 1e-9");
    return {std::move(out), residual, 1.0 / rcond};
}

} // namespace beurling
