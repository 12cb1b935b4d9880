#include "subbergman/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subbergman {

WeightParameter::WeightParameter(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha <= -2.0) {
        throw std::domain_error("weight parameter alpha must be finite and > -2, got " +
                                std::to_string(alpha));
    }
}

void WeightParameter::require_integrable(const char* operation) const {
    if (alpha_ <= -1.0) {
        throw std::domain_error(std::string(operation) + " requires alpha > -1, got " +
                                std::to_string(alpha_));
    }
}

DiskPoint::DiskPoint(cplx z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= 1.0) {
        throw std::domain_error("point is not inside the open unit disk");
    }
}

BasisWeights basis_weights(WeightParameter alpha, std::size_t n_max) {
    const double a = alpha.value();
    std::vector<double> w(n_max + 1);
    w[0] = 1.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        const double nn = static_cast<double>(n);
        w[n + 1] = w[n] * (nn + 2.0 + a) / (nn + 1.0);
    }
    return BasisWeights{alpha, std::move(w)};
}

double basis_weight_lgamma(double alpha, std::size_t n) {
    const double nn = static_cast<double>(n);
    return std::exp(std::lgamma(nn + 2.0 + alpha) - std::lgamma(nn + 1.0) - std::lgamma(2.0 + alpha));
}

BinomialSeries binomial_coeffs(double s, std::size_t n_max) {
    std::vector<double> c(n_max + 1);
    c[0] = 1.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        const double nn = static_cast<double>(n);
        c[n + 1] = c[n] * (nn - s) / (nn + 1.0);
        if (!std::isfinite(c[n + 1])) {
            throw std::overflow_error("binomial coefficient overflow at index " + std::to_string(n + 1));
        }
    }
    return BinomialSeries{s, std::move(c)};
}

double BinomialSeries::partial_sum(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

AsymptoteReport weight_asymptote_check(const BasisWeights& weights) {
    if (weights.size() < 32) {
        throw std::invalid_argument("weight_asymptote_check needs at least 32 weights");
    }
    const double exponent = weights.alpha.value() + 1.0;
    AsymptoteReport report;
    report.ratios.resize(weights.size());
    for (std::size_t n = 0; n < weights.size(); ++n) {
        report.ratios[n] = weights[n] / std::pow(static_cast<double>(n + 1), exponent);
    }
    const std::size_t start = weights.size() - weights.size() / 4;
    const auto first = report.ratios.begin() + static_cast<std::ptrdiff_t>(start);
    const auto [lo, hi] = std::minmax_element(first, report.ratios.end());
    double mean = 0.0;
    for (auto it = first; it != report.ratios.end(); ++it) mean += *it;
    mean /= static_cast<double>(report.ratios.end() - first);
    report.tail_oscillation = (*hi - *lo) / mean;
    return report;
}

}  // namespace subbergman
