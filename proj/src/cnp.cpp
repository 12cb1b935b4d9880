#include "subbergman/cnp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "subbergman/sampling.hpp"

namespace subbergman {

DivisionHazard::DivisionHazard(std::size_t i_, std::size_t j_, double modulus_)
    : std::runtime_error("kernel nearly vanishes at sample pair (" + std::to_string(i_) + ", " + std::to_string(j_) +
                         "), |K| = " + std::to_string(modulus_)),
      i(i_),
      j(j_),
      modulus(modulus_) {}

PickMatrix build_pick(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::vector<DiskPoint> points) {
    if (symbol.is_constant()) throw std::invalid_argument("Pick matrix needs a non-constant symbol");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("Pick matrix sample points must be distinct");

    auto normalized = normalize(symbol);
    const std::size_t n = points.size();
    std::vector<cplx> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = normalized.psi.eval(points[i]);

    const double s = 2.0 + alpha.value();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const cplx x = points[i].value() * std::conj(points[j].value());
            const cplx numerator = 1.0 - psi[i] * std::conj(psi[j]);
            const cplx inverse_kernel = std::pow(1.0 - x, s) / numerator;
            const double k_modulus = 1.0 / std::abs(inverse_kernel);
            if (!(k_modulus >= 1e-12)) throw DivisionHazard(i, j, k_modulus);
            const cplx value = 1.0 - inverse_kernel;
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            m(ii, jj) = value;
            m(jj, ii) = std::conj(value);
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    }
    return PickMatrix{std::move(points), std::move(m), alpha, std::move(normalized.psi)};
}

namespace {

struct MinEigen {
    double value;
    Eigen::VectorXcd vector;
};

MinEigen min_eigenpair(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

Eigen::MatrixXcd principal_submatrix(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& idx) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
            sub(a, b) = m(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(a)]),
                          static_cast<Eigen::Index>(idx[static_cast<std::size_t>(b)]));
    return sub;
}

PickReport psd_test_impl(const Eigen::MatrixXcd& matrix, const std::vector<DiskPoint>* points, double tolerance) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("PSD tolerance must be positive");
    PickReport report;
    report.tolerance = tolerance;
    if (matrix.rows() == 0) return report;
    report.trace = matrix.trace().real();
    const double threshold = -tolerance * std::max(1.0, report.trace);
    auto eig = min_eigenpair(matrix);
    report.min_eigenvalue = eig.value;
    if (eig.value >= threshold) {
        report.verdict = PickVerdict::psd_pass;
        return report;
    }
    report.verdict = PickVerdict::fail;
    report.failing_trials = 1;

    std::vector<std::size_t> active(static_cast<std::size_t>(matrix.rows()));
    std::iota(active.begin(), active.end(), 0);
    bool pruned = true;
    while (pruned && active.size() > 1) {
        pruned = false;
        std::vector<std::size_t> order(active.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(eig.vector(static_cast<Eigen::Index>(a))) < std::abs(eig.vector(static_cast<Eigen::Index>(b)));
        });
        for (std::size_t pos : order) {
            std::vector<std::size_t> candidate = active;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(pos));
            auto trial = min_eigenpair(principal_submatrix(matrix, candidate));
            if (trial.value < threshold) {
                active = std::move(candidate);
                eig = std::move(trial);
                pruned = true;
                break;
            }
        }
    }

    PickWitness witness;
    witness.indices = active;
    witness.matrix = principal_submatrix(matrix, active);
    witness.eigenvector = eig.vector;
    witness.min_eigenvalue = eig.value;
    if (points) {
        for (std::size_t i : active) witness.points.push_back((*points)[i]);
    }
    report.witness = std::move(witness);
    return report;
}

double normalized_min(const PickReport& r) { return r.min_eigenvalue / std::max(1.0, r.trace); }

}  // namespace

PickReport psd_test(const PickMatrix& matrix, double tolerance) {
    return psd_test_impl(matrix.entries, &matrix.points, tolerance);
}

PickReport psd_test(const Eigen::MatrixXcd& matrix, double tolerance) { return psd_test_impl(matrix, nullptr, tolerance); }

PickReport cnp_scan(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n_points,
                    std::size_t n_trials, std::uint64_t seed, double tolerance) {
    if (n_points < 3) throw std::invalid_argument("cnp_scan needs at least 3 points per trial");
    if (n_trials < 1) throw std::invalid_argument("cnp_scan needs at least one trial");
    std::optional<PickReport> worst;
    std::size_t failing = 0;
    std::vector<std::string> hazards;
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        DiskSampler sampler(seed, trial);
        auto points = sampler.boundary_enriched(n_points, alpha.value());
        PickReport report;
        try {
            report = psd_test(build_pick(symbol, alpha, std::move(points)), tolerance);
        } catch (const DivisionHazard& h) {
            hazards.push_back("trial " + std::to_string(trial) + ": " + h.what());
            continue;
        }
        if (report.verdict == PickVerdict::fail) ++failing;
        report.worst_trial = trial;
        if (!worst || normalized_min(report) < normalized_min(*worst)) worst = std::move(report);
    }
    if (!worst) throw std::runtime_error("every cnp_scan trial hit a division hazard");
    worst->trials = n_trials;
    worst->failing_trials = failing;
    worst->sampler_seed = seed;
    worst->hazards = std::move(hazards);
    return *worst;
}

std::vector<double> cnp_trial_minima(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t n_points,
                                     std::size_t n_trials, std::uint64_t seed) {
    std::vector<double> minima;
    minima.reserve(n_trials);
    for (std::size_t trial = 0; trial < n_trials; ++trial) {
        DiskSampler sampler(seed, trial);
        const auto pick = build_pick(symbol, alpha, sampler.boundary_enriched(n_points, alpha.value()));
        minima.push_back(min_eigenpair(pick.entries).value);
    }
    return minima;
}

}  // namespace subbergman
