#pragma once

// Contractions of finite disk systems: certification and generators.

#include <cstddef>
#include <functional>
#include <span>

#include "kpgeom/disk_hull.hpp"
#include "kpgeom/rng.hpp"

namespace kpg {

struct ContractionPair {
    Configuration original;
    Configuration contracted;
};

struct ContractionReport {
    bool ok = true;
    /// max over i < j of d(p_i', p_j') - d(p_i, p_j), or 0 for fewer than two disks.
    double max_violation = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Throws domain errors for mismatched planes, lengths or radii.
ContractionReport is_contraction(const ContractionPair& pair, double tol = -1.0);

/// Moves each center to distance lambda * d(anchor, p_i) along [anchor, p_i].
/// Hyperbolic and euclidean planes only.
Configuration radial_contraction(const Configuration& config, const Point& anchor, double lambda);

/// Resamples center i uniformly in the intersection of the balls
/// B(p_j, d(p_i, p_j)), j != i, by rejection from the smallest of them.
Configuration single_point_move(const Configuration& config, std::size_t i, CounterRng& rng, int trials = 100000);

using Generator = std::function<Configuration(const Configuration&)>;

/// Applies the generators in order, certifying every step and the end-to-end pair.
Configuration compose(const Configuration& config, std::span<const Generator> steps);

} // namespace kpg
