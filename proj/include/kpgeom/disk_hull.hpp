#pragma once

// Convex hull of a finite union of disks as an explicit boundary chain.

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kpgeom/geometry.hpp"

namespace kpg {

struct Configuration {
    Plane plane;
    std::vector<Disk> disks;
};

/// Circular arc of disk `disk_index`, traversed counter-clockwise from
/// start_angle to end_angle (angles in the canonical frame at the center,
/// end_angle >= start_angle). Radius-0 disks give zero-length arcs whose span
/// is the turning angle at the corner.
struct Arc {
    std::size_t disk_index = 0;
    Disk disk;
    double start_angle = 0.0;
    double end_angle = 0.0;

    double span() const { return end_angle - start_angle; }
};

struct Segment {
    Point start;
    Point end;
    Geodesic line;
};

using Piece = std::variant<Arc, Segment>;

struct BoundaryChain {
    Plane plane;
    std::vector<Piece> pieces;
};

/// Throws unless the configuration is usable: nonempty, valid centers,
/// nonnegative radii and, on the sphere, contained in a closed hemisphere.
void validate_configuration(const Configuration& config);

/// Pole h with d(h, p_i) + r_i <= pi/(2k) for all disks, if one exists.
std::optional<Point> hemisphere_certificate(const Plane& sphere, std::span<const Disk> disks);

/// Indices of disks not contained in another disk (equal disks keep the lowest index).
std::vector<std::size_t> maximal_disks(const Plane& plane, std::span<const Disk> disks);

BoundaryChain hull_boundary(const Configuration& config);

Point piece_start(const BoundaryChain& chain, const Piece& piece);
Point piece_end(const BoundaryChain& chain, const Piece& piece);
/// Throws chain_integrity unless consecutive pieces share their endpoints.
void check_chain(const BoundaryChain& chain);

double piece_length(const BoundaryChain& chain, const Piece& piece);
double hull_perimeter(const BoundaryChain& chain);
double two_disk_perimeter(const Plane& plane, const Disk& d1, const Disk& d2);

/// Minimum signed distance from p to the supporting geodesics of the region,
/// together with the minimizing geodesic. Positive inside.
struct SupportContact {
    double margin;
    Geodesic line;
};
SupportContact support_contact(const BoundaryChain& chain, const Point& p);
double support_margin(const BoundaryChain& chain, const Point& p);
bool hull_contains(const BoundaryChain& chain, const Point& p);

/// Area enclosed by the chain (fan triangulation plus circular caps).
double chain_area(const BoundaryChain& chain);
/// Total turning plus curvature times area, minus 2 pi.
double gauss_bonnet_residual(const BoundaryChain& chain);

/// Points along the chain: every piece start plus `per_piece` interior points of each piece.
std::vector<Point> sample_boundary(const BoundaryChain& chain, int per_piece);

} // namespace kpg
