#ifndef SUBBERGMAN_SYMBOLS_HPP
#define SUBBERGMAN_SYMBOLS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subbergman/scalars.hpp"

namespace subbergman {

/// phi(z) = zeta (a - z) / (1 - conj(a) z), the disk automorphism swapping 0 and a.
struct MobiusSpec {
    MobiusSpec(cplx a, cplx zeta = 1.0);

    cplx a;
    cplx zeta;

    cplx operator()(cplx z) const;
};

/// zeta * prod_i (a_i - z) / (1 - conj(a_i) z). Repeated zeros encode multiplicity.
struct BlaschkeSpec {
    explicit BlaschkeSpec(std::vector<cplx> zeros, cplx zeta = 1.0);

    std::vector<cplx> zeros;
    cplx zeta;

    std::size_t degree() const noexcept { return zeros.size(); }
    cplx operator()(cplx z) const;
};

/// phi(z) = c z^n.
struct MonomialSpec {
    MonomialSpec(unsigned n, cplx c);

    /// The scale c = sqrt((2+alpha) Gamma(n-2-alpha) / (n! Gamma(-1-alpha))) that
    /// makes the sub-Bergman kernel CNP for -2 < alpha < -1.
    static MonomialSpec cnp_example(unsigned n, double alpha);

    unsigned n;
    cplx c;

    cplx operator()(cplx z) const;
};

/// phi(z) = exp(c (z + 1) / (z - 1)), the atomic singular inner function with mass c at 1.
struct SingularInnerSpec {
    explicit SingularInnerSpec(double c);

    double c;

    cplx operator()(cplx z) const;
};

/// An explicitly given polynomial symbol.
struct PolynomialSpec {
    explicit PolynomialSpec(std::vector<cplx> coeffs);

    std::vector<cplx> coeffs;
};

using SymbolSpec = std::variant<MobiusSpec, BlaschkeSpec, MonomialSpec, SingularInnerSpec, PolynomialSpec>;

/// Bound |phi(z)| <= bound on the circle |z| = radius > 1. Gives Cauchy
/// estimates |c_k| <= bound * radius^-k for every Taylor coefficient.
struct AnalyticEnvelope {
    double radius;
    double bound;
};

/// Truncated Taylor expansion c_0..c_{L-1} of an analytic symbol.
///
/// tail_bound bounds |c_k| for every k >= L, so Horner evaluation at |z| <= r
/// is within tail_bound * r^L / (1 - r) of the represented function. When an
/// analytic envelope is known the sharper bound M (r/R)^L / (1 - r/R) is used.
struct PowerSeriesSymbol {
    std::vector<cplx> coeffs;
    double tail_bound = 0.0;
    std::optional<AnalyticEnvelope> envelope;

    std::size_t length() const noexcept { return coeffs.size(); }
    cplx constant_term() const { return coeffs.front(); }

    cplx eval(DiskPoint z) const;

    /// Upper bound on |phi(z) - eval(z)| for |z| <= r.
    double eval_error_bound(double r) const;

    /// sum |c_k| plus the coefficient tail, an upper bound for sup |phi| on the disk
    /// when the tail is summable.
    double sup_norm_proxy() const;

    bool is_constant(double tol = 0.0) const;
};

/// Truncation length for which the tail bound drops below 1e-12. Singular
/// inner symbols, whose coefficients decay only algebraically, get 400.
std::size_t default_series_length(const SymbolSpec& spec);

PowerSeriesSymbol to_series(const SymbolSpec& spec, std::size_t length);
PowerSeriesSymbol to_series(const SymbolSpec& spec);

/// Closed-form evaluation, independent of the series path.
cplx eval_closed_form(const SymbolSpec& spec, cplx z);

/// Degree when the spec describes a finite Blaschke product. Besides Mobius
/// and Blaschke specs this recognizes zeta z^k given as a monomial or as an
/// explicit series with a single unimodular coefficient.
std::optional<std::size_t> blaschke_degree(const SymbolSpec& spec);
bool is_finite_blaschke(const SymbolSpec& spec);
bool is_mobius(const SymbolSpec& spec);
/// The point a with phi = zeta phi_a, for Mobius maps.
std::optional<cplx> mobius_zero(const SymbolSpec& spec);
bool is_singular_inner(const SymbolSpec& spec);

/// psi = phi_a o phi with a = phi(0), and the rescaling factor
/// g(z) = sqrt(1 - |a|^2) / (1 - conj(a) phi(z)), so that
/// K^{alpha,psi}(z,w) = g(z) conj(g(w)) K^{alpha,phi}(z,w).
struct NormalizedSymbol {
    PowerSeriesSymbol psi;
    PowerSeriesSymbol phi;
    cplx a;

    cplx g(DiskPoint z) const;
};

/// Throws std::domain_error when |phi(0)| >= 1.
NormalizedSymbol normalize(const PowerSeriesSymbol& phi);

struct AdmissibilityVerdict {
    bool admissible = false;
    double sup_estimate = 0.0;
    /// Grid point attaining the sup estimate.
    std::optional<DiskPoint> witness;
    bool pick_checked = false;
    double pick_min_eigenvalue = 0.0;
    /// Sample points of a failing Pick matrix, if that test ran and failed.
    std::vector<DiskPoint> pick_witness;
    std::string note;
};

/// Samples |phi| on a polar grid with `grid` radii up to 0.999 and 4*grid
/// angles. For alpha < -1 the multiplier algebra is smaller than H^infinity,
/// so the contractive-multiplier Pick matrix (1 - phi(z_i) conj(phi(z_j)))
/// K_alpha(z_i, z_j) is also tested on 30 sampled points. A pass is evidence
/// on a finite sample, not a proof.
AdmissibilityVerdict admissibility_check(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t grid,
                                         double tol = 1e-9);

}  // namespace subbergman

#endif
