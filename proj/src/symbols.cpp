#include "subbergman/symbols.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "subbergman/sampling.hpp"
#include "subbergman/series.hpp"

namespace subbergman {

namespace {

constexpr double kTailTarget = 1e-12;
constexpr std::size_t kMaxDefaultLength = 5000;
constexpr std::size_t kSingularDefaultLength = 400;

cplx unit(cplx zeta) {
    const double m = std::abs(zeta);
    if (!(m > 0.0) || std::abs(m - 1.0) > 1e-12) {
        throw std::domain_error("rotation constant zeta must be unimodular");
    }
    return zeta / m;
}

void require_in_disk(cplx a, const char* what) {
    if (!(std::abs(a) < 1.0)) throw std::domain_error(std::string(what) + " must lie in the open unit disk");
}

// Cauchy radius halfway between 1 and the nearest pole 1/rho.
double envelope_radius(double rho) { return rho > 0.0 ? 0.5 * (1.0 + 1.0 / rho) : 2.0; }

double blaschke_bound_on_circle(const std::vector<cplx>& zeros, double radius) {
    double m = 1.0;
    for (const cplx& a : zeros) {
        const double r = std::abs(a);
        m *= (radius + r) / (1.0 - r * radius);
    }
    return m;
}

std::vector<cplx> mobius_coeffs(cplx a, cplx zeta, std::size_t length) {
    std::vector<cplx> c(length, cplx{0.0, 0.0});
    const cplx abar = std::conj(a);
    const double defect = std::norm(a) - 1.0;
    c[0] = zeta * a;
    cplx power{1.0, 0.0};  // abar^(k-1)
    for (std::size_t k = 1; k < length; ++k) {
        c[k] = zeta * power * defect;
        power *= abar;
    }
    return c;
}

// Coefficients of exp(-c (1+z)/(1-z)) from (1-z)^2 f' = -2c f:
// (n+1) f_{n+1} = (2n - 2c) f_n - (n-1) f_{n-1}.
std::vector<cplx> singular_inner_coeffs(double mass, std::size_t length) {
    std::vector<double> f(length, 0.0);
    f[0] = std::exp(-mass);
    if (length > 1) f[1] = -2.0 * mass * f[0];
    for (std::size_t n = 1; n + 1 < length; ++n) {
        const double nn = static_cast<double>(n);
        f[n + 1] = ((2.0 * nn - 2.0 * mass) * f[n] - (nn - 1.0) * f[n - 1]) / (nn + 1.0);
    }
    return {f.begin(), f.end()};
}

std::size_t length_for_envelope(const AnalyticEnvelope& env) {
    const double l = std::ceil(std::log(env.bound / kTailTarget) / std::log(env.radius));
    if (!std::isfinite(l) || l > static_cast<double>(kMaxDefaultLength)) return kMaxDefaultLength;
    return std::max<std::size_t>(1, static_cast<std::size_t>(l));
}

PowerSeriesSymbol with_envelope(std::vector<cplx> coeffs, AnalyticEnvelope env, bool polynomial_exhausted) {
    PowerSeriesSymbol s;
    s.tail_bound = polynomial_exhausted ? 0.0 : env.bound * std::pow(env.radius, -static_cast<double>(coeffs.size()));
    s.coeffs = std::move(coeffs);
    s.envelope = env;
    return s;
}

struct SeriesBuilder {
    std::size_t length;

    PowerSeriesSymbol operator()(const MobiusSpec& m) const {
        const double rho = std::abs(m.a);
        const AnalyticEnvelope env{envelope_radius(rho), blaschke_bound_on_circle({m.a}, envelope_radius(rho))};
        return with_envelope(mobius_coeffs(m.a, m.zeta, length), env, rho == 0.0 && length >= 2);
    }

    PowerSeriesSymbol operator()(const BlaschkeSpec& b) const {
        std::vector<cplx> acc{b.zeta};
        double rho = 0.0;
        for (const cplx& a : b.zeros) {
            const auto factor = mobius_coeffs(a, 1.0, length);
            acc = series::multiply(acc, factor, length);
            rho = std::max(rho, std::abs(a));
        }
        acc.resize(length, cplx{0.0, 0.0});
        const double radius = envelope_radius(rho);
        const AnalyticEnvelope env{radius, blaschke_bound_on_circle(b.zeros, radius)};
        return with_envelope(std::move(acc), env, rho == 0.0 && length > b.degree());
    }

    PowerSeriesSymbol operator()(const MonomialSpec& m) const {
        std::vector<cplx> c(length, cplx{0.0, 0.0});
        if (m.n < length) c[m.n] = m.c;
        PowerSeriesSymbol s;
        s.coeffs = std::move(c);
        s.tail_bound = m.n < length ? 0.0 : std::abs(m.c);
        s.envelope = AnalyticEnvelope{2.0, std::abs(m.c) * std::pow(2.0, m.n)};
        return s;
    }

    PowerSeriesSymbol operator()(const SingularInnerSpec& si) const {
        PowerSeriesSymbol s;
        s.coeffs = singular_inner_coeffs(si.c, length);
        // |c_k| <= ||phi||_{H^2} <= 1 for an inner function.
        s.tail_bound = 1.0;
        return s;
    }

    PowerSeriesSymbol operator()(const PolynomialSpec& p) const {
        std::vector<cplx> c(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(std::min(length, p.coeffs.size())));
        c.resize(length, cplx{0.0, 0.0});
        double bound = 0.0;
        double tail = 0.0;
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
            bound += std::abs(p.coeffs[k]) * std::pow(2.0, static_cast<double>(k));
            if (k >= length) tail = std::max(tail, std::abs(p.coeffs[k]));
        }
        PowerSeriesSymbol s;
        s.coeffs = std::move(c);
        s.tail_bound = tail;
        s.envelope = AnalyticEnvelope{2.0, std::max(bound, std::numeric_limits<double>::min())};
        return s;
    }
};

}  // namespace

MobiusSpec::MobiusSpec(cplx a_, cplx zeta_) : a(a_), zeta(unit(zeta_)) { require_in_disk(a, "Mobius parameter a"); }

cplx MobiusSpec::operator()(cplx z) const { return zeta * (a - z) / (1.0 - std::conj(a) * z); }

BlaschkeSpec::BlaschkeSpec(std::vector<cplx> zeros_, cplx zeta_) : zeros(std::move(zeros_)), zeta(unit(zeta_)) {
    if (zeros.empty()) throw std::invalid_argument("Blaschke product needs at least one zero");
    for (const cplx& a : zeros) require_in_disk(a, "Blaschke zero");
}

cplx BlaschkeSpec::operator()(cplx z) const {
    cplx v = zeta;
    for (const cplx& a : zeros) v *= (a - z) / (1.0 - std::conj(a) * z);
    return v;
}

MonomialSpec::MonomialSpec(unsigned n_, cplx c_) : n(n_), c(c_) {
    if (n == 0) throw std::invalid_argument("monomial degree must be positive");
    if (std::abs(c) > 1.0) throw std::domain_error("monomial scale must satisfy |c| <= 1");
}

MonomialSpec MonomialSpec::cnp_example(unsigned n, double alpha) {
    if (!(alpha > -2.0 && alpha < -1.0)) {
        throw std::domain_error("the CNP monomial scale is defined only for -2 < alpha < -1");
    }
    if (n == 0) throw std::invalid_argument("monomial degree must be positive");
    const double nn = static_cast<double>(n);
    const double log_c2 = std::log(2.0 + alpha) + std::lgamma(nn - 2.0 - alpha) - std::lgamma(nn + 1.0) -
                          std::lgamma(-1.0 - alpha);
    return MonomialSpec(n, std::sqrt(std::exp(log_c2)));
}

cplx MonomialSpec::operator()(cplx z) const { return c * std::pow(z, static_cast<int>(n)); }

SingularInnerSpec::SingularInnerSpec(double c_) : c(c_) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("singular inner mass must be positive");
}

cplx SingularInnerSpec::operator()(cplx z) const { return std::exp(c * (z + 1.0) / (z - 1.0)); }

PolynomialSpec::PolynomialSpec(std::vector<cplx> coeffs_) : coeffs(std::move(coeffs_)) {
    if (coeffs.empty()) throw std::invalid_argument("series symbol needs at least one coefficient");
}

cplx PowerSeriesSymbol::eval(DiskPoint z) const { return series::horner(coeffs, z.value()); }

double PowerSeriesSymbol::eval_error_bound(double r) const {
    if (tail_bound == 0.0) return 0.0;
    const double l = static_cast<double>(coeffs.size());
    double bound = r < 1.0 ? tail_bound * std::pow(r, l) / (1.0 - r) : std::numeric_limits<double>::infinity();
    if (envelope && r < envelope->radius) {
        const double q = r / envelope->radius;
        bound = std::min(bound, envelope->bound * std::pow(q, l) / (1.0 - q));
    }
    return bound;
}

double PowerSeriesSymbol::sup_norm_proxy() const {
    double s = 0.0;
    for (const cplx& c : coeffs) s += std::abs(c);
    return s + eval_error_bound(1.0);
}

bool PowerSeriesSymbol::is_constant(double tol) const {
    if (tail_bound > tol) return false;
    return std::all_of(coeffs.begin() + 1, coeffs.end(), [&](const cplx& c) { return std::abs(c) <= tol; });
}

std::size_t default_series_length(const SymbolSpec& spec) {
    struct Visitor {
        std::size_t operator()(const MobiusSpec& m) const {
            if (m.a == cplx{0.0, 0.0}) return 2;
            const double radius = envelope_radius(std::abs(m.a));
            return length_for_envelope({radius, blaschke_bound_on_circle({m.a}, radius)});
        }
        std::size_t operator()(const BlaschkeSpec& b) const {
            double rho = 0.0;
            for (const cplx& a : b.zeros) rho = std::max(rho, std::abs(a));
            if (rho == 0.0) return b.degree() + 1;
            const double radius = envelope_radius(rho);
            return length_for_envelope({radius, blaschke_bound_on_circle(b.zeros, radius)});
        }
        std::size_t operator()(const MonomialSpec& m) const { return m.n + 1; }
        std::size_t operator()(const SingularInnerSpec&) const { return kSingularDefaultLength; }
        std::size_t operator()(const PolynomialSpec& p) const { return p.coeffs.size(); }
    };
    return std::visit(Visitor{}, spec);
}

PowerSeriesSymbol to_series(const SymbolSpec& spec, std::size_t length) {
    if (length == 0) throw std::invalid_argument("series length must be at least 1");
    return std::visit(SeriesBuilder{length}, spec);
}

PowerSeriesSymbol to_series(const SymbolSpec& spec) { return to_series(spec, default_series_length(spec)); }

cplx eval_closed_form(const SymbolSpec& spec, cplx z) {
    return std::visit(
        [z](const auto& s) -> cplx {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PolynomialSpec>) {
                return series::horner(s.coeffs, z);
            } else {
                return s(z);
            }
        },
        spec);
}

std::optional<std::size_t> blaschke_degree(const SymbolSpec& spec) {
    constexpr double kUnimodularTol = 1e-12;
    if (std::holds_alternative<MobiusSpec>(spec)) return 1;
    if (const auto* b = std::get_if<BlaschkeSpec>(&spec)) return b->degree();
    if (const auto* m = std::get_if<MonomialSpec>(&spec)) {
        if (std::abs(std::abs(m->c) - 1.0) <= kUnimodularTol) return m->n;
        return std::nullopt;
    }
    if (const auto* p = std::get_if<PolynomialSpec>(&spec)) {
        std::optional<std::size_t> degree;
        for (std::size_t k = 0; k < p->coeffs.size(); ++k) {
            if (p->coeffs[k] == cplx{0.0, 0.0}) continue;
            if (degree || k == 0 || std::abs(std::abs(p->coeffs[k]) - 1.0) > kUnimodularTol) return std::nullopt;
            degree = k;
        }
        return degree;
    }
    return std::nullopt;
}

bool is_finite_blaschke(const SymbolSpec& spec) { return blaschke_degree(spec).has_value(); }

bool is_mobius(const SymbolSpec& spec) { return blaschke_degree(spec) == std::optional<std::size_t>(1); }

std::optional<cplx> mobius_zero(const SymbolSpec& spec) {
    if (!is_mobius(spec)) return std::nullopt;
    if (const auto* m = std::get_if<MobiusSpec>(&spec)) return m->a;
    if (const auto* b = std::get_if<BlaschkeSpec>(&spec)) return b->zeros.front();
    return cplx{0.0, 0.0};
}

bool is_singular_inner(const SymbolSpec& spec) { return std::holds_alternative<SingularInnerSpec>(spec); }

cplx NormalizedSymbol::g(DiskPoint z) const {
    return std::sqrt(1.0 - std::norm(a)) / (1.0 - std::conj(a) * phi.eval(z));
}

NormalizedSymbol normalize(const PowerSeriesSymbol& phi) {
    if (phi.coeffs.empty()) throw std::invalid_argument("cannot normalize an empty series");
    const cplx a = phi.constant_term();
    const double abs_a = std::abs(a);
    if (!(abs_a < 1.0)) throw std::domain_error("normalize requires |phi(0)| < 1");

    NormalizedSymbol out{PowerSeriesSymbol{}, phi, a};
    if (a == cplx{0.0, 0.0}) {
        // phi_0(w) = -w
        out.psi = phi;
        for (cplx& c : out.psi.coeffs) c = -c;
        return out;
    }

    // psi is an infinite series even when phi is a polynomial. An exact phi
    // (zero tail) may be padded with zeros until psi's own tail is negligible.
    std::size_t length = phi.length();
    const double m1 = phi.sup_norm_proxy();
    std::optional<AnalyticEnvelope> psi_envelope;
    if (phi.envelope && std::isfinite(m1) && abs_a * m1 < 1.0) {
        // Three circles: log M(r) is convex in log r, so between |z| = 1 (bound M1)
        // and the envelope circle R (bound M) we find R' with |a| M(R') < 1.
        const double big_m = phi.envelope->bound;
        const double target = 0.5 * (m1 + 1.0 / abs_a);
        double t = 1.0;
        if (big_m > target) t = std::log(target / m1) / std::log(big_m / m1);
        const double bound_phi = std::min(target, big_m);
        psi_envelope = AnalyticEnvelope{std::pow(phi.envelope->radius, t),
                                        (abs_a + bound_phi) / (1.0 - abs_a * bound_phi)};
        if (phi.tail_bound == 0.0) length = std::max(length, length_for_envelope(*psi_envelope));
    }

    std::vector<cplx> numerator(length, cplx{0.0, 0.0});
    std::vector<cplx> denominator(length, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < phi.length(); ++k) {
        numerator[k] = -phi.coeffs[k];
        denominator[k] = -std::conj(a) * phi.coeffs[k];
    }
    numerator[0] += a;
    denominator[0] += 1.0;
    out.psi.coeffs = series::multiply(numerator, series::reciprocal(denominator, length), length);
    out.psi.coeffs[0] = 0.0;

    if (psi_envelope) {
        out.psi.envelope = psi_envelope;
        out.psi.tail_bound = psi_envelope->bound * std::pow(psi_envelope->radius, -static_cast<double>(length));
    } else {
        // psi is bounded by 1 whenever phi is; coefficients then obey |c_k| <= 1.
        out.psi.envelope.reset();
        out.psi.tail_bound = std::max(1.0, phi.tail_bound);
    }
    return out;
}

AdmissibilityVerdict admissibility_check(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::size_t grid,
                                         double tol) {
    if (grid < 16) throw std::invalid_argument("admissibility grid must have at least 16 radii");
    constexpr double kMaxRadius = 0.999;
    AdmissibilityVerdict verdict;
    const std::size_t angles = 4 * grid;
    double sup = -1.0;
    for (std::size_t i = 1; i <= grid; ++i) {
        const double r = kMaxRadius * static_cast<double>(i) / static_cast<double>(grid);
        for (std::size_t j = 0; j < angles; ++j) {
            const DiskPoint z(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles)));
            const double m = std::abs(symbol.eval(z));
            if (m > sup) {
                sup = m;
                verdict.witness = z;
            }
        }
    }
    verdict.sup_estimate = sup;
    const double slack = tol + symbol.eval_error_bound(kMaxRadius);
    verdict.admissible = sup <= 1.0 + slack;
    verdict.note = "sampled sup-norm; evidence on a finite grid, not a proof";

    if (alpha.value() < -1.0) {
        DiskSampler sampler(0x5b0b, 0);
        const auto pts = sampler.boundary_enriched(30, alpha.value());
        const std::size_t n = pts.size();
        Eigen::MatrixXcd pick(n, n);
        const double s = 2.0 + alpha.value();
        for (std::size_t i = 0; i < n; ++i) {
            const cplx fi = symbol.eval(pts[i]);
            for (std::size_t j = 0; j < n; ++j) {
                const cplx fj = symbol.eval(pts[j]);
                const cplx x = pts[i].value() * std::conj(pts[j].value());
                pick(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    (1.0 - fi * std::conj(fj)) * std::pow(1.0 - x, -s);
            }
        }
        pick = 0.5 * (pick + pick.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pick, Eigen::EigenvaluesOnly);
        const double trace = pick.trace().real();
        verdict.pick_checked = true;
        verdict.pick_min_eigenvalue = solver.eigenvalues()(0);
        if (verdict.pick_min_eigenvalue < -tol * std::max(1.0, trace)) {
            verdict.admissible = false;
            verdict.pick_witness = pts;
        }
        verdict.note += "; contractive-multiplier Pick matrix tested on 30 sampled points";
    }
    return verdict;
}

}  // namespace subbergman
