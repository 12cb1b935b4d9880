#include "subbergman/operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace subbergman {

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::toeplitz: return "toeplitz";
        case OperatorKind::defect_phi: return "defect_phi";
        case OperatorKind::defect_conj: return "defect_conj";
        case OperatorKind::inclusion_diag: return "inclusion_diag";
    }
    return "unknown";
}

double OperatorMatrix::max_asymmetry() const {
    if (entries.rows() == 0) return 0.0;
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

Eigen::MatrixXcd toeplitz_entries(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t rows,
                                  std::size_t cols) {
    const auto w = basis_weights(alpha, rows);
    std::vector<double> sqrt_w(rows);
    for (std::size_t k = 0; k < rows; ++k) sqrt_w[k] = std::sqrt(w[k]);
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    const std::size_t band = symbol.length();
    for (std::size_t k = 0; k < cols; ++k) {
        const std::size_t mmax = std::min(rows, k + band);
        for (std::size_t m = k; m < mmax; ++m) {
            t(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = symbol.coeffs[m - k] * (sqrt_w[k] / sqrt_w[m]);
        }
    }
    return t;
}

}  // namespace

OperatorMatrix toeplitz_matrix(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n) {
    if (n == 0) throw std::invalid_argument("toeplitz_matrix needs n >= 1");
    return OperatorMatrix{toeplitz_entries(symbol, alpha, n, n), alpha, OperatorKind::toeplitz};
}

OperatorMatrix defect_matrix(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n, DefectSide side,
                             std::size_t padding) {
    if (n == 0) throw std::invalid_argument("defect_matrix needs n >= 1");
    if (padding == std::numeric_limits<std::size_t>::max()) padding = symbol.length();
    const auto ni = static_cast<Eigen::Index>(n);
    // Columns beyond n never reach the top-left block of either product.
    const Eigen::MatrixXcd t = toeplitz_entries(symbol, alpha, n + padding, n);
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(ni, ni);
    if (side == DefectSide::phi) {
        const auto top = t.topRows(ni);
        e.noalias() -= top * top.adjoint();
        return OperatorMatrix{std::move(e), alpha, OperatorKind::defect_phi};
    }
    e.noalias() -= t.adjoint() * t;
    return OperatorMatrix{std::move(e), alpha, OperatorKind::defect_conj};
}

Eigen::MatrixXcd defect_root(const OperatorMatrix& defect) {
    if (!defect.is_defect()) throw std::invalid_argument("defect_root needs a defect operator");
    const Eigen::MatrixXcd h = 0.5 * (defect.entries + defect.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::VectorXcd normalized_kernel_coefficients(WeightParameter alpha, DiskPoint a, std::size_t n) {
    const auto w = basis_weights(alpha, n == 0 ? 0 : n - 1);
    const cplx abar = std::conj(a.value());
    const double scale = std::pow(1.0 - std::norm(a.value()), 0.5 * (2.0 + alpha.value()));
    Eigen::VectorXcd k(static_cast<Eigen::Index>(n));
    cplx power{1.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) {
        k(static_cast<Eigen::Index>(m)) = scale * std::sqrt(w[m]) * power;
        power *= abar;
    }
    return k;
}

double berezin(const OperatorMatrix& defect, DiskPoint a) {
    if (!defect.is_defect()) {
        throw std::invalid_argument("berezin transform needs a defect operator, got " + to_string(defect.kind));
    }
    const auto k = normalized_kernel_coefficients(defect.alpha, a, defect.basis_size());
    return k.dot(defect.entries * k).real();
}

FitWindow parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("window must look like a:b, got '" + text + "'");
    try {
        std::size_t used = 0;
        const auto first = std::stoul(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        const std::string tail = text.substr(colon + 1);
        const auto last = std::stoul(tail, &used);
        if (used != tail.size() || first == 0 || last <= first) throw std::invalid_argument("");
        return FitWindow{first, last};
    } catch (const std::exception&) {
        throw std::invalid_argument("window must look like a:b with 1 <= a < b, got '" + text + "'");
    }
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::reverse(values.begin(), values.end());
    return values;
}

SpectrumReport spectrum(const OperatorMatrix& op, FitWindow window) {
    if (op.max_asymmetry() > 1e-10) throw std::invalid_argument("spectrum needs a Hermitian matrix");
    const std::size_t n = op.basis_size();
    const std::size_t usable = (3 * n) / 4;
    if (window.first < 1 || window.first >= window.last || window.last > usable) {
        throw std::invalid_argument("fit window must satisfy 1 <= first < last <= 3N/4 = " + std::to_string(usable));
    }

    SpectrumReport report;
    report.window = window;
    report.eigenvalues = hermitian_eigenvalues(0.5 * (op.entries + op.entries.adjoint()));

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t count = 0;
    for (std::size_t rank = window.first; rank <= window.last; ++rank) {
        const double lambda = report.eigenvalues[rank - 1];
        if (!(lambda > 0.0)) continue;
        const double x = std::log(static_cast<double>(rank) + 1.0);
        const double y = std::log(lambda);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        const double c = static_cast<double>(count);
        report.decay_exponent = (c * sxy - sx * sy) / (c * sxx - sx * sx);
    } else {
        report.decay_exponent = std::numeric_limits<double>::quiet_NaN();
    }

    for (const double p : std::array{1.0, 1.5, 2.0, 3.0}) {
        double sum = 0.0;
        double last = 0.0;
        for (std::size_t k = 0; k < usable; ++k) {
            last = std::pow(std::abs(report.eigenvalues[k]), p);
            sum += last;
        }
        report.schatten.push_back({p, std::pow(sum, 1.0 / p), !(last > 0.01 * sum)});
    }
    return report;
}

std::vector<double> inclusion_eigenvalues(WeightParameter alpha, double gamma, std::size_t n) {
    const WeightParameter g(gamma);
    if (!(gamma < alpha.value())) throw std::domain_error("inclusion eigenvalues need gamma < alpha");
    const auto w_alpha = basis_weights(alpha, n);
    const auto w_gamma = basis_weights(g, n);
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = w_gamma[k] / w_alpha[k];
    return out;
}

}  // namespace subbergman
