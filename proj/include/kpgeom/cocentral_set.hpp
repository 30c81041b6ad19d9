#pragma once

// Minimal covering disks of U = D_1 cap ... cap D_n, rho-spindles, the
// co-central tree and its dual central set.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kpgeom/disk_intersection.hpp"
#include "kpgeom/tree.hpp"

namespace kpg {

/// Intersection of all radius-rho disks containing p and q.
struct Spindle {
    Point p;
    Point q;
    double rho = 0.0;
    /// The two extreme disks whose circles pass through p and q (equal when d(p,q) = 2 rho).
    Disk d1;
    Disk d2;
    IntersectionRegion region;
};

Spindle spindle(const Plane& plane, const Point& p, const Point& q, double rho);
bool spindle_contains(const Spindle& s, const Point& x, double tol = 0.0);

/// Smallest disk centered at a given point containing U. Contacts are indices
/// into region.vertices at the covering distance.
struct CoveringDisk {
    Disk disk;
    std::vector<std::size_t> contacts;
    /// The circle runs along a boundary arc of U (the center is an arc center).
    bool along_arc = false;
    /// The farthest point of U is interior to a boundary arc.
    bool arc_point = false;
    Point far_point;

    /// No covering disk is a proper subset: at least two contact points.
    bool minimal() const { return along_arc || contacts.size() + (arc_point ? 1 : 0) >= 2; }
};

CoveringDisk covering_disk_at(const IntersectionRegion& region, const Point& center);

/// Vertex contacts are indices into region.vertices; edge generators are the
/// two vertices q_i, q_j whose bisector carries the edge.
GeodesicTree cocentral_tree(const IntersectionRegion& region);

/// Centers of minimal covering disks through q_i and q_j: a (possibly
/// degenerate) segment of their bisector.
struct CenterSegment {
    bool empty = true;
    Point a;
    Point b;
};
CenterSegment min_covering_disk_on_bisector(const IntersectionRegion& region, std::size_t i, std::size_t j);

struct DualityReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t dual_vertices = 0;
    std::size_t dual_edges = 0;
    /// Largest chart distance between a mapped vertex and its dual partner.
    double max_vertex_error = 0.0;
    bool edges_match = false;
    bool pass = false;
};

/// Maps every covering disk B to psi(iota(B)) (complement, then stereographic
/// projection from the deepest point of U) and compares the co-central tree
/// with the central set of the union of the dual disks, computed directly in
/// the euclidean chart.
DualityReport duality_check(const IntersectionRegion& region, double tol = 1e-6);

/// Every disk replaced by a minimal covering disk of U contained in it, plus
/// the disks of all tree vertices; duplicates removed.
Configuration cocentral_sharpen(const Configuration& config);

struct CocentralDecompositionReport {
    std::size_t leaf = 0;       // D_k
    std::size_t neighbor = 0;   // D_{k-1}
    std::size_t samples = 0;
    /// Points of D_{k-1} \ D_k outside the intersection of the other disks.
    std::size_t containment_mismatch = 0;
    /// area(U) - area(U_{k-1}) + area(D_{k-1}) - area(D_{k-1} cap D_k)
    double area_residual = 0.0;
    bool pass = false;
};

/// Leaf split of a co-sharpened system: U_{k-1} = U disjoint-union (D_{k-1} \ D_k).
CocentralDecompositionReport cocentral_decomposition_check(const Configuration& sharpened, std::size_t samples = 10000,
                                                           std::uint64_t seed = 1);

} // namespace kpg
