#include "subbergman/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subbergman {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

DiskSampler::DiskSampler(std::uint64_t seed, std::uint64_t stream) : engine_(make_engine(seed, stream)) {}

double DiskSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<DiskPoint> DiskSampler::boundary_enriched(std::size_t count, double alpha, double min_separation) {
    const double push = 1.0 / (2.0 + std::max(alpha, 0.0));
    std::vector<DiskPoint> points;
    points.reserve(count);
    std::size_t attempts = 0;
    while (points.size() < count) {
        if (++attempts > 1000 * (count + 1)) {
            throw std::runtime_error("disk sampler could not honor the minimum separation");
        }
        const double r = std::pow(std::sqrt(uniform()), push);
        const double theta = 2.0 * std::numbers::pi * uniform();
        const cplx z = std::polar(r, theta);
        if (std::abs(z) >= 1.0) continue;
        const bool crowded = std::any_of(points.begin(), points.end(), [&](const DiskPoint& p) {
            return std::abs(p.value() - z) < min_separation;
        });
        if (!crowded) points.emplace_back(z);
    }
    return points;
}

std::vector<DiskPoint> DiskSampler::uniform_disk(std::size_t count, double max_radius) {
    std::vector<DiskPoint> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double r = max_radius * std::sqrt(uniform());
        const double theta = 2.0 * std::numbers::pi * uniform();
        points.emplace_back(std::polar(r, theta));
    }
    return points;
}

}  // namespace subbergman
