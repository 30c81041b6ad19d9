#pragma once

// Seeded Monte-Carlo area estimates for intersections and unions of disks.
// Samples are split into shards, each drawing from its own derived substream,
// so a result depends only on (seed, samples, shards), never on thread timing.

#include <cstddef>
#include <cstdint>
#include <span>

#include "kpgeom/geometry.hpp"
#include "kpgeom/kernels.hpp"
#include "kpgeom/rng.hpp"

namespace kpg {

/// Uniform sample (with respect to the area element of the plane) from a disk.
Point sample_in_disk(const Plane& plane, const Disk& disk, CounterRng& rng);

struct McOptions {
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 1;
    unsigned shards = 8;
    /// Worker threads; shards are distributed over them.
    unsigned workers = 1;
    simd::Isa isa = simd::best_isa();
};

struct McEstimate {
    double area = 0.0;
    double std_error = 0.0;
    std::size_t hits = 0;
    std::size_t samples = 0;
};

/// Estimates area(D_1 cap ... cap D_n) by sampling the smallest input disk.
McEstimate mc_intersection_area(const Plane& plane, std::span<const Disk> disks, const McOptions& opt = {});
/// Estimates area(D_1 cup ... cup D_n) by sampling a disk enclosing all of them.
McEstimate mc_union_area(const Plane& plane, std::span<const Disk> disks, const McOptions& opt = {});

} // namespace kpg
