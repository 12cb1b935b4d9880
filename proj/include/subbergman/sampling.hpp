#ifndef SUBBERGMAN_SAMPLING_HPP
#define SUBBERGMAN_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "subbergman/scalars.hpp"

namespace subbergman {

/// Deterministic point sampler for the unit disk. Each (seed, stream) pair
/// owns an independent generator, so trial k draws the same points whether
/// trials run serially or in parallel.
class DiskSampler {
public:
    DiskSampler(std::uint64_t seed, std::uint64_t stream);

    /// Uniform double in [0, 1) built from the top 53 bits of the engine, so
    /// draws are identical across standard libraries.
    double uniform();

    /// Radii r = sqrt(u), pushed outward as r^(1/(2 + max(alpha, 0))); uniform
    /// angles; points closer than min_separation to an earlier one are redrawn.
    std::vector<DiskPoint> boundary_enriched(std::size_t count, double alpha, double min_separation = 1e-3);

    /// Area-uniform points with |z| <= max_radius.
    std::vector<DiskPoint> uniform_disk(std::size_t count, double max_radius);

private:
    std::mt19937_64 engine_;
};

}  // namespace subbergman

#endif
