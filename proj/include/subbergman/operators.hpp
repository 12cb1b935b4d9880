#ifndef SUBBERGMAN_OPERATORS_HPP
#define SUBBERGMAN_OPERATORS_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "subbergman/scalars.hpp"
#include "subbergman/symbols.hpp"

namespace subbergman {

enum class OperatorKind { toeplitz, defect_phi, defect_conj, inclusion_diag };

std::string to_string(OperatorKind kind);

/// Finite section of an operator on A^2_alpha in the orthonormal monomial
/// basis e_n = sqrt(w_n) z^n.
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    WeightParameter alpha;
    OperatorKind kind;

    std::size_t basis_size() const noexcept { return static_cast<std::size_t>(entries.rows()); }
    bool is_defect() const noexcept { return kind == OperatorKind::defect_phi || kind == OperatorKind::defect_conj; }
    /// max |A_ij - conj(A_ji)|
    double max_asymmetry() const;
};

/// T_phi restricted to span{e_0..e_{n-1}}: entry(m, k) = c_{m-k} sqrt(w_k / w_m)
/// for m >= k. Lower triangular, bandwidth = series length.
OperatorMatrix toeplitz_matrix(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n);

enum class DefectSide {
    phi,   ///< E_phi = I - T T*
    conj,  ///< E_conj = I - T* T
};

/// Top-left n x n block of E_phi or E_conj for the infinite matrix of
/// T_phi. T is built with n + padding rows; padding >= series length makes
/// the block exact. The default padding is the series length.
OperatorMatrix defect_matrix(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n, DefectSide side,
                             std::size_t padding = std::numeric_limits<std::size_t>::max());

/// D = E^{1/2} from the eigendecomposition of E, negative rounding noise clipped.
Eigen::MatrixXcd defect_root(const OperatorMatrix& defect);

/// Coefficients (1-|a|^2)^{(2+alpha)/2} sqrt(w_m) conj(a)^m of the normalized
/// kernel k_a, m < n.
Eigen::VectorXcd normalized_kernel_coefficients(WeightParameter alpha, DiskPoint a, std::size_t n);

/// <E k_a, k_a> with k_a truncated to the basis size. For E_phi this is
/// 1 - |phi(a)|^2 up to the discarded mass of k_a. Rejects non-defect input.
double berezin(const OperatorMatrix& defect, DiskPoint a);

/// Inclusive range of 1-based eigenvalue ranks (rank 1 = largest).
struct FitWindow {
    std::size_t first = 0;
    std::size_t last = 0;
};

/// Parses "a:b".
FitWindow parse_window(const std::string& text);

struct SchattenEstimate {
    double p = 0.0;
    /// (sum lambda_n^p)^{1/p} over the retained eigenvalues.
    double value = 0.0;
    /// False when the last retained term exceeds 1% of the partial sum.
    bool tail_converged = false;
};

struct SpectrumReport {
    /// Descending.
    std::vector<double> eigenvalues;
    /// Least-squares slope of log(lambda_n) against log(n + 1) over the window.
    double decay_exponent = 0.0;
    FitWindow window;
    std::vector<SchattenEstimate> schatten;
};

/// Eigenvalues of a Hermitian finite section, plus a power-law fit and
/// Schatten partial sums. Fits and sums never use the last quarter of the
/// spectrum, where truncation distorts it. Rejects asymmetry above 1e-10 and
/// windows outside [1, 3N/4].
SpectrumReport spectrum(const OperatorMatrix& op, FitWindow window);

/// Descending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h);

/// Eigenvalues w_k(gamma) / w_k(alpha), k = 0..n, of i*i for the inclusion
/// i: A^2_gamma -> A^2_alpha. Requires -2 < gamma < alpha.
std::vector<double> inclusion_eigenvalues(WeightParameter alpha, double gamma, std::size_t n);

}  // namespace subbergman

#endif
