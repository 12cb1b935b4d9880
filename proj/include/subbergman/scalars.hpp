#ifndef SUBBERGMAN_SCALARS_HPP
#define SUBBERGMAN_SCALARS_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace subbergman {

using cplx = std::complex<double>;

/// Default tolerance for algebraic identities.
inline constexpr double kAlgebraicTol = 1e-10;
/// Default tolerance for series limits.
inline constexpr double kSeriesTol = 1e-8;

/// Weight exponent of the space A^2_alpha. Construction enforces alpha > -2,
/// below which the coefficient inner product is undefined.
class WeightParameter {
public:
    explicit WeightParameter(double alpha);

    double value() const noexcept { return alpha_; }

    /// Throws std::domain_error when alpha <= -1. Used by operations that
    /// integrate against the finite measure dA_alpha.
    void require_integrable(const char* operation) const;

    bool operator==(const WeightParameter&) const = default;

private:
    double alpha_;
};

/// A point of the open unit disk.
class DiskPoint {
public:
    explicit DiskPoint(cplx z);
    DiskPoint(double re, double im) : DiskPoint(cplx{re, im}) {}

    cplx value() const noexcept { return z_; }
    double abs() const noexcept { return std::abs(z_); }

    bool operator==(const DiskPoint&) const = default;

private:
    cplx z_;
};

/// Squared norms w_n = Gamma(n+2+alpha) / (n! Gamma(2+alpha)) of the monomials
/// z^n in A^2_alpha; the orthonormal basis is e_n = sqrt(w_n) z^n.
struct BasisWeights {
    WeightParameter alpha;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t n) const { return values[n]; }
};

/// Taylor coefficients of (1 - x)^s.
struct BinomialSeries {
    double s;
    std::vector<double> coeffs;

    /// Partial sum of the first coeffs.size() terms at x.
    double partial_sum(double x) const;
};

struct AsymptoteReport {
    /// r_n = w_n / (n+1)^(alpha+1)
    std::vector<double> ratios;
    /// (max - min) / mean of r_n over the last quarter of indices.
    double tail_oscillation;
};

/// Weights w_0..w_{n_max} via the ratio recurrence w_{n+1} = w_n (n+2+alpha)/(n+1).
BasisWeights basis_weights(WeightParameter alpha, std::size_t n_max);

/// Coefficients c_0..c_{n_max} of (1 - x)^s via c_{n+1} = c_n (n - s)/(n + 1).
/// Throws std::overflow_error if a coefficient stops being finite.
BinomialSeries binomial_coeffs(double s, std::size_t n_max);

/// Requires at least 32 weights.
AsymptoteReport weight_asymptote_check(const BasisWeights& weights);

/// w_n(alpha) through log-Gamma; independent of the recurrence and used to
/// cross-check it.
double basis_weight_lgamma(double alpha, std::size_t n);

}  // namespace subbergman

#endif
