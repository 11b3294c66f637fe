#ifndef KNUDSEN_PARITY_SPECTRAL_HPP
#define KNUDSEN_PARITY_SPECTRAL_HPP

#include "knudsen/system_builder.hpp"

#include <Eigen/Dense>

namespace knudsen {

/// Thin SVD A = U diag(sigma) V^T, singular values descending.
struct SvdResult {
    Eigen::MatrixXd u;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd v;
    int sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD of a tall or square matrix (rows >= cols).
/// Columns are swept in fixed cyclic order, so the result is deterministic.
/// A pair is rotated while |a_p . a_q| > tol * |a_p| |a_q|.
SvdResult jacobi_svd(const Eigen::MatrixXd& a, double tol = 1e-15, int max_sweeps = 60);

/// Structured eigendecomposition of [[0, M0], [M0^T, 0]]:
///   M0 R_odd = R_even Λ+,  M0^T R_even = R_odd Λ+,  R_even^T R_even = I/2,
/// and R_zero spans the null space of M0^T.
struct ParityEigen {
    Eigen::VectorXd lambda_plus;
    Eigen::MatrixXd r_even;
    Eigen::MatrixXd r_odd;
    Eigen::MatrixXd r_zero;
};

/// Singular values descending; every column of R_odd has its largest-magnitude
/// entry positive (lowest row wins ties), with R_even flipped jointly.
/// Throws StructuralError if M0 loses column rank.
ParityEigen decompose(const ReducedSystem& system);

/// R = [[R_even, R_zero, R_even], [R_odd, 0, -R_odd]], orthogonal.
Eigen::MatrixXd assemble_full_R(const ParityEigen& eigen);

/// diag(Λ+, 0, -Λ+) matching the column order of assemble_full_R.
Eigen::VectorXd assemble_full_lambda(const ParityEigen& eigen);

} // namespace knudsen

#endif // KNUDSEN_PARITY_SPECTRAL_HPP
