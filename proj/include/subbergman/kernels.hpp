#ifndef SUBBERGMAN_KERNELS_HPP
#define SUBBERGMAN_KERNELS_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subbergman/scalars.hpp"
#include "subbergman/symbols.hpp"

namespace subbergman {

enum class KernelKind { bergman, sub, conj_sub };

std::string to_string(KernelKind kind);
KernelKind parse_kernel_kind(const std::string& text);

/// Which reproducing kernel to evaluate:
///   bergman   K(z,w)           = (1 - z conj(w))^{-(2+alpha)}
///   sub       K^{alpha,phi}    = (1 - phi(z) conj(phi(w))) K(z,w)
///   conj_sub  K^{alpha,conjphi} = integral of (1-|phi(u)|^2) K(z,u) K(u,w) dA_alpha(u)
/// conj_sub integrates against the finite measure dA_alpha and so needs alpha > -1.
struct KernelSpec {
    KernelSpec(KernelKind kind, WeightParameter alpha, std::optional<PowerSeriesSymbol> symbol = std::nullopt);

    KernelKind kind;
    WeightParameter alpha;
    std::optional<PowerSeriesSymbol> symbol;
};

/// (1 - z conj(w))^{-(2+alpha)} on the principal branch; Re(1 - z conj(w)) > 0
/// on the disk so the branch is unambiguous.
cplx bergman_kernel(WeightParameter alpha, cplx z, cplx w);

struct ConjSubOptions {
    std::size_t initial_size = 200;
    std::size_t max_size = 6400;
    /// Truncation doubles until the value moves by less than this.
    double tol = 1e-8;
};

struct QuadratureOptions {
    std::size_t radial_nodes = 128;
    std::size_t angular_nodes = 256;
};

/// Evaluates one KernelSpec repeatedly. For conj_sub the defect matrix
/// E = I - T*T is built once per truncation size and kept, and the value is
/// the coefficient-space sum sum_{m,n} E_mn e_m(z) conj(e_n(w)).
class KernelEvaluator {
public:
    explicit KernelEvaluator(KernelSpec spec, ConjSubOptions options = {});

    const KernelSpec& spec() const noexcept { return spec_; }

    cplx operator()(DiskPoint z, DiskPoint w);

    /// [K(z_i, z_j)]
    Eigen::MatrixXcd gram(std::span<const DiskPoint> points);

    /// Basis size used by the last conj_sub evaluation.
    std::size_t last_truncation() const noexcept { return last_truncation_; }

private:
    cplx conj_sub_value(DiskPoint z, DiskPoint w);
    const Eigen::MatrixXcd& defect_at(std::size_t n);

    KernelSpec spec_;
    ConjSubOptions options_;
    std::map<std::size_t, Eigen::MatrixXcd> defects_;
    std::size_t last_truncation_ = 0;
};

/// One-shot evaluation. Throws std::domain_error for conj_sub with
/// alpha <= -1 and std::invalid_argument when sub/conj_sub lack a symbol.
cplx eval_kernel(const KernelSpec& spec, DiskPoint z, DiskPoint w);

/// The conj_sub kernel by direct quadrature of its defining area integral:
/// Gauss-Legendre in x with r^2 = 1 - x^2 (which absorbs the (1-r^2)^alpha
/// weight for half-integer alpha) times the trapezoid rule in angle.
cplx conj_sub_quadrature(const PowerSeriesSymbol& symbol, WeightParameter alpha, DiskPoint z, DiskPoint w,
                         QuadratureOptions options = {});

/// k_a = K_a / sqrt(K(a,a)).
struct NormalizedKernelPoint {
    DiskPoint a;
    WeightParameter alpha;
};

/// (1 - |a|^2)^{(2+alpha)/2} / (1 - z conj(a))^{2+alpha}
cplx eval_normalized(const NormalizedKernelPoint& point, DiskPoint z);

/// max over pairs (i, j) of |K^{alpha,psi}(z_i,z_j) - g(z_i) conj(g(z_j)) K^{alpha,phi}(z_i,z_j)|
/// with psi, g from normalize(). Needs at least two points and a
/// non-constant symbol.
double rescaling_check(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::span<const DiskPoint> points);

/// Residual of K^{alpha,phi}(z,w) = (1-|a|^2) / ((1 - conj(a) z)(1 - a conj(w))) (1 - z conj(w))^{-(1+alpha)}
/// for the Mobius map phi = zeta (a - z)/(1 - conj(a) z). The left side is
/// evaluated from the truncated series of phi. Requires -1 < alpha <= 0.
double mobius_factorization_check(cplx a, cplx zeta, WeightParameter alpha, std::span<const DiskPoint> points);

}  // namespace subbergman

#endif
