#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "beurling/localized_matrix.hpp"

namespace beurling {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatMap = Eigen::Map<const RowMajorMatrix>;

inline ConstMatMap eigen_view(const LocalizedMatrix& A) {
    return ConstMatMap(A.entries().data(), A.size(), A.size());
}

inline LocalizedMatrix matrix_product(const LocalizedMatrix& A, const LocalizedMatrix& B) {
    const int n = A.size();
    if (B.size() != n) throw argument_error("matrix sizes differ");
    std::vector<double> out(static_cast<std::size_t>(n) * n);
    Eigen::Map<RowMajorMatrix>(out.data(), n, n).noalias() = eigen_view(A) * eigen_view(B);
    return LocalizedMatrix(A.graph_ptr(), std::move(out));
}

inline std::vector<double> matvec(const LocalizedMatrix& A, std::span<const double> x) {
    const int n = A.size();
    if (static_cast<int>(x.size()) != n) throw argument_error("vector size does not match matrix");
    std::vector<double> y(n);
    Eigen::Map<Eigen::VectorXd>(y.data(), n).noalias() =
        eigen_view(A) * Eigen::Map<const Eigen::VectorXd>(x.data(), n);
    return y;
}

} // namespace beurling
