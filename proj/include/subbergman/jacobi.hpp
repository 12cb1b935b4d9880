#ifndef SUBBERGMAN_JACOBI_HPP
#define SUBBERGMAN_JACOBI_HPP

#include <Eigen/Dense>

namespace subbergman {

struct JacobiResult {
    /// Ascending.
    Eigen::VectorXd eigenvalues;
    /// Column k is a unit eigenvector for eigenvalues(k).
    Eigen::MatrixXcd eigenvectors;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on the real symmetric embedding [[A, -B], [B, A]]
/// of H = A + iB. Each eigenvalue of H appears twice in the embedding; one
/// copy of each pair is returned. Meant as a slow reference solver for small
/// matrices, independent of the LAPACK-style path.
JacobiResult jacobi_hermitian(const Eigen::MatrixXcd& h, double tol = 1e-14, int max_sweeps = 100);

}  // namespace subbergman

#endif
