#include "subbergman/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subbergman/operators.hpp"
#include "subbergman/quadrature.hpp"

namespace subbergman {

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::bergman: return "bergman";
        case KernelKind::sub: return "sub";
        case KernelKind::conj_sub: return "conj_sub";
    }
    return "unknown";
}

KernelKind parse_kernel_kind(const std::string& text) {
    if (text == "bergman") return KernelKind::bergman;
    if (text == "sub") return KernelKind::sub;
    if (text == "conj_sub") return KernelKind::conj_sub;
    throw std::invalid_argument("unknown kernel kind '" + text + "' (expected bergman, sub or conj_sub)");
}

KernelSpec::KernelSpec(KernelKind kind_, WeightParameter alpha_, std::optional<PowerSeriesSymbol> symbol_)
    : kind(kind_), alpha(alpha_), symbol(std::move(symbol_)) {
    if (kind != KernelKind::bergman && !symbol) {
        throw std::invalid_argument(to_string(kind) + " kernel needs a symbol");
    }
    if (kind == KernelKind::conj_sub) alpha.require_integrable("conj_sub kernel");
}

cplx bergman_kernel(WeightParameter alpha, cplx z, cplx w) {
    return std::pow(1.0 - z * std::conj(w), -(2.0 + alpha.value()));
}

namespace {

Eigen::VectorXcd basis_values(WeightParameter alpha, cplx z, std::size_t n) {
    const auto w = basis_weights(alpha, n - 1);
    Eigen::VectorXcd e(static_cast<Eigen::Index>(n));
    cplx power{1.0, 0.0};
    for (std::size_t m = 0; m < n; ++m) {
        e(static_cast<Eigen::Index>(m)) = std::sqrt(w[m]) * power;
        power *= z;
    }
    return e;
}

cplx sub_kernel(const PowerSeriesSymbol& symbol, WeightParameter alpha, DiskPoint z, DiskPoint w) {
    return (1.0 - symbol.eval(z) * std::conj(symbol.eval(w))) * bergman_kernel(alpha, z.value(), w.value());
}

}  // namespace

KernelEvaluator::KernelEvaluator(KernelSpec spec, ConjSubOptions options) : spec_(std::move(spec)), options_(options) {
    if (options_.initial_size == 0 || options_.max_size < options_.initial_size) {
        throw std::invalid_argument("conj_sub truncation sizes must satisfy 0 < initial <= max");
    }
}

cplx KernelEvaluator::operator()(DiskPoint z, DiskPoint w) {
    switch (spec_.kind) {
        case KernelKind::bergman: return bergman_kernel(spec_.alpha, z.value(), w.value());
        case KernelKind::sub: return sub_kernel(*spec_.symbol, spec_.alpha, z, w);
        case KernelKind::conj_sub: return conj_sub_value(z, w);
    }
    throw std::logic_error("unreachable kernel kind");
}

Eigen::MatrixXcd KernelEvaluator::gram(std::span<const DiskPoint> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            g(i, j) = (*this)(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
            g(j, i) = std::conj(g(i, j));
        }
        g(i, i) = g(i, i).real();
    }
    return g;
}

const Eigen::MatrixXcd& KernelEvaluator::defect_at(std::size_t n) {
    auto it = defects_.find(n);
    if (it == defects_.end()) {
        auto e = defect_matrix(*spec_.symbol, spec_.alpha, n, DefectSide::conj);
        it = defects_.emplace(n, std::move(e.entries)).first;
    }
    return it->second;
}

cplx KernelEvaluator::conj_sub_value(DiskPoint z, DiskPoint w) {
    auto value_at = [&](std::size_t n) -> cplx {
        const auto ez = basis_values(spec_.alpha, z.value(), n);
        const auto ew = basis_values(spec_.alpha, w.value(), n);
        return ez.conjugate().dot(defect_at(n) * ew.conjugate());
    };
    std::size_t n = options_.initial_size;
    cplx previous = value_at(n);
    while (2 * n <= options_.max_size) {
        const cplx next = value_at(2 * n);
        const bool settled = std::abs(next - previous) < options_.tol * std::max(1.0, std::abs(next));
        n *= 2;
        previous = next;
        if (settled) break;
    }
    last_truncation_ = n;
    return previous;
}

cplx eval_kernel(const KernelSpec& spec, DiskPoint z, DiskPoint w) {
    KernelEvaluator evaluator(spec);
    return evaluator(z, w);
}

cplx conj_sub_quadrature(const PowerSeriesSymbol& symbol, WeightParameter alpha, DiskPoint z, DiskPoint w,
                         QuadratureOptions options) {
    alpha.require_integrable("conj_sub quadrature");
    if (options.radial_nodes == 0 || options.angular_nodes == 0) {
        throw std::invalid_argument("quadrature needs at least one node per direction");
    }
    const double a = alpha.value();
    const double s = 2.0 + a;
    const auto rule = gauss_legendre(options.radial_nodes, 0.0, 1.0);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(options.angular_nodes);
    const cplx zv = z.value();
    const cplx wbar = std::conj(w.value());

    cplx total{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double r = std::sqrt(1.0 - x * x);
        // (alpha+1)(1-t)^alpha dt with t = 1 - x^2
        const double radial_weight = rule.weights[i] * 2.0 * (a + 1.0) * std::pow(x, 2.0 * a + 1.0);
        cplx ring{0.0, 0.0};
        for (std::size_t j = 0; j < options.angular_nodes; ++j) {
            const cplx u = std::polar(r, dtheta * static_cast<double>(j));
            const double defect = 1.0 - std::norm(symbol.eval(DiskPoint(u)));
            ring += defect * std::pow(1.0 - zv * std::conj(u), -s) * std::pow(1.0 - u * wbar, -s);
        }
        total += radial_weight * ring / static_cast<double>(options.angular_nodes);
    }
    return total;
}

cplx eval_normalized(const NormalizedKernelPoint& point, DiskPoint z) {
    const double s = 2.0 + point.alpha.value();
    const cplx a = point.a.value();
    return std::pow(1.0 - std::norm(a), 0.5 * s) / std::pow(1.0 - z.value() * std::conj(a), s);
}

double rescaling_check(const PowerSeriesSymbol& symbol, WeightParameter alpha, std::span<const DiskPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("rescaling_check needs at least two points");
    if (symbol.is_constant()) throw std::invalid_argument("rescaling_check needs a non-constant symbol");
    const auto normalized = normalize(symbol);
    std::vector<cplx> g(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) g[i] = normalized.g(points[i]);
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const cplx lhs = sub_kernel(normalized.psi, alpha, points[i], points[j]);
            const cplx rhs = g[i] * std::conj(g[j]) * sub_kernel(symbol, alpha, points[i], points[j]);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double mobius_factorization_check(cplx a, cplx zeta, WeightParameter alpha, std::span<const DiskPoint> points) {
    if (!(alpha.value() > -1.0 && alpha.value() <= 0.0)) {
        throw std::domain_error("Mobius factorization check needs -1 < alpha <= 0");
    }
    const MobiusSpec mobius(a, zeta);
    const auto phi = to_series(mobius);
    const double norm_a = 1.0 - std::norm(a);
    double worst = 0.0;
    for (const auto& z : points) {
        for (const auto& w : points) {
            const cplx lhs = sub_kernel(phi, alpha, z, w);
            const cplx zw = z.value() * std::conj(w.value());
            const cplx rhs = norm_a / ((1.0 - std::conj(a) * z.value()) * (1.0 - a * std::conj(w.value()))) *
                             std::pow(1.0 - zw, -(1.0 + alpha.value()));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace subbergman
