#ifndef SUBBERGMAN_CNP_HPP
#define SUBBERGMAN_CNP_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subbergman/scalars.hpp"
#include "subbergman/symbols.hpp"

namespace subbergman {

/// M_ij = 1 - 1/K^{alpha,psi}(z_i, z_j) for the normalized symbol psi (psi(0) = 0),
/// so that K^{alpha,psi}(z, 0) = 1. The kernel is CNP iff every such matrix
/// is positive semidefinite.
struct PickMatrix {
    std::vector<DiskPoint> points;
    Eigen::MatrixXcd entries;
    WeightParameter alpha;
    PowerSeriesSymbol symbol_normalized;
};

/// Raised when |K| < 1e-12 at some sample pair, where 1/K is unreliable.
class DivisionHazard : public std::runtime_error {
public:
    DivisionHazard(std::size_t i, std::size_t j, double modulus);
    std::size_t i;
    std::size_t j;
    double modulus;
};

/// Normalizes phi, evaluates K^{alpha,psi} on all pairs and returns 1 - 1/K.
/// Throws std::invalid_argument for constant symbols or repeated points and
/// DivisionHazard when K nearly vanishes.
PickMatrix build_pick(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::vector<DiskPoint> points);

struct PickWitness {
    std::vector<DiskPoint> points;
    /// Indices of `points` in the originating sample.
    std::vector<std::size_t> indices;
    /// Eigenvector for the minimal eigenvalue of the witness submatrix.
    Eigen::VectorXcd eigenvector;
    double min_eigenvalue = 0.0;
    Eigen::MatrixXcd matrix;
};

enum class PickVerdict { psd_pass, fail };

struct PickReport {
    PickVerdict verdict = PickVerdict::psd_pass;
    double min_eigenvalue = 0.0;
    double trace = 0.0;
    double tolerance = 0.0;
    std::optional<PickWitness> witness;
    std::size_t trials = 1;
    std::size_t failing_trials = 0;
    std::size_t worst_trial = 0;
    std::uint64_t sampler_seed = 0;
    /// A failure comes with an exportable witness and certifies non-CNP; a
    /// pass is evidence from finitely many samples only.
    bool certificate() const noexcept { return verdict == PickVerdict::fail; }
    std::vector<std::string> hazards;
};

/// Pass iff lambda_min >= -tolerance * max(1, trace). On failure the sample
/// is pruned greedily (smallest eigenvector weight first) to a subset whose
/// matrix still has lambda_min < -tolerance * max(1, trace).
PickReport psd_test(const PickMatrix& matrix, double tolerance = 1e-9);

/// Same test on a bare Hermitian matrix (points unknown).
PickReport psd_test(const Eigen::MatrixXcd& matrix, double tolerance = 1e-9);

/// n_trials independent boundary-enriched samples of n_points each; trial k
/// uses the sampler stream (seed, k). Returns the worst trial's report.
PickReport cnp_scan(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n_points,
                    std::size_t n_trials, std::uint64_t seed, double tolerance = 1e-9);

/// Per-trial minimal eigenvalues, in trial order.
std::vector<double> cnp_trial_minima(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n_points,
                                     std::size_t n_trials, std::uint64_t seed);

}  // namespace subbergman

#endif
