#pragma once

// U = D_1 cap ... cap D_n as a convex polygon of circular arcs.

#include <cstddef>
#include <optional>
#include <vector>

#include "kpgeom/disk_hull.hpp"

namespace kpg {

struct IntersectionRegion {
    Plane plane;
    std::vector<Disk> disks;
    /// Arcs only, counter-clockwise. Empty when the region is empty or a single point.
    BoundaryChain chain;
    /// Arc meeting points q_1, ..., q_m (for a single-point region, that point).
    std::vector<Point> vertices;
    bool empty_flag = false;
    /// U equals one of the disks (index full_index).
    bool full_disk_flag = false;
    std::size_t full_index = 0;

    bool single_point() const { return !empty_flag && chain.pieces.empty(); }
};

IntersectionRegion intersect_disks(const Configuration& config);

/// Area of the region: Gauss-Bonnet on curved planes, polygon plus circular
/// segments on the euclidean plane. Zero for empty and single-point regions.
double region_area(const IntersectionRegion& region);
/// Fan triangulation plus circular caps, independent of the turning angles.
double region_area_by_caps(const IntersectionRegion& region);

bool region_contains(const IntersectionRegion& region, const Point& p, double tol = 0.0);

struct Witness {
    bool nonempty;
    Point point;
    /// max_i d(point, p_i) - r_i at the witness.
    double value;
};

/// Minimizes p -> max_i (d(p, p_i) - r_i); nonempty iff the minimum is <= 1e-10.
Witness is_nonempty(const Configuration& config);

} // namespace kpg
