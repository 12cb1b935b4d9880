#include "subbergman/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace subbergman {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

JacobiResult jacobi_hermitian(const Eigen::MatrixXcd& h, double tol, int max_sweeps) {
    if (h.rows() != h.cols()) throw std::invalid_argument("jacobi_hermitian needs a square matrix");
    const Eigen::Index n = h.rows();
    const Eigen::Index m = 2 * n;
    Eigen::MatrixXd a(m, m);
    a.topLeftCorner(n, n) = h.real();
    a.bottomRightCorner(n, n) = h.real();
    a.topRightCorner(n, n) = -h.imag();
    a.bottomLeftCorner(n, n) = h.imag();
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(m, m);

    const double scale = std::max(a.norm(), 1e-300);
    JacobiResult result;
    for (; result.sweeps < max_sweeps; ++result.sweeps) {
        if (off_diagonal_norm(a) <= tol * scale) break;
        for (Eigen::Index p = 0; p < m - 1; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

    // Embedded eigenvectors come in pairs [x; y], [-y; x]; both map to the
    // same complex line x + iy, so keep every other one.
    result.eigenvalues.resize(n);
    result.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index i0 = order[static_cast<std::size_t>(2 * k)];
        const Eigen::Index i1 = order[static_cast<std::size_t>(2 * k + 1)];
        result.eigenvalues(k) = 0.5 * (a(i0, i0) + a(i1, i1));
        Eigen::VectorXcd x(n);
        for (Eigen::Index r = 0; r < n; ++r) x(r) = {v(r, i0), v(r + n, i0)};
        result.eigenvectors.col(k) = x.normalized();
    }
    return result;
}

}  // namespace subbergman
