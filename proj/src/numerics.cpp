#include "siq/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace siq::numerics {

std::vector<double> tridiag_eigen_lowest(const std::vector<double>& diag,
                                         const std::vector<double>& offdiag, int k) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    if (static_cast<Eigen::Index>(offdiag.size()) != n - 1 || n < 1)
        throw DimensionMismatch("tridiag_eigen_lowest: offdiag size must be diag size - 1");
    if (k < 1 || k > n)
        throw DimensionMismatch("tridiag_eigen_lowest: k must be in [1, n]");

    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
    Eigen::VectorXd e(n > 1 ? n - 1 : 1);
    if (n > 1) e = Eigen::Map<const Eigen::VectorXd>(offdiag.data(), n - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e.head(n - 1), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("tridiag_eigen_lowest: eigensolver failed");

    std::vector<double> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    return out;
}

}  // namespace siq::numerics
