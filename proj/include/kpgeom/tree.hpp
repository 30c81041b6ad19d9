#pragma once

// Finite trees of geodesic segments, shared by the central and co-central sets.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kpgeom/geometry.hpp"

namespace kpg {

struct TreeVertex {
    Point point;
    double radius = 0.0;
    /// Boundary features touched by the vertex disk (meaning depends on the producer).
    std::vector<std::size_t> contacts;
};

struct TreeEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    /// The two boundary features the edge is equidistant from.
    std::array<std::size_t, 2> generators{};
};

struct GeodesicTree {
    Plane plane;
    std::vector<TreeVertex> vertices;
    std::vector<TreeEdge> edges;

    std::vector<std::vector<std::size_t>> adjacency() const;
    std::size_t degree(std::size_t v) const;
};

struct TreeCertificate {
    bool connected = false;
    bool euler = false;     // |E| = |V| - 1
    bool simple = false;    // edges meet only at shared endpoints
    bool ok() const { return connected && euler && simple; }
};

TreeCertificate certify_tree(const GeodesicTree& tree);

/// Distance from p to the nearest point of the tree and that point.
struct TreeProjection {
    double distance;
    Point point;
    /// Edge index, or the number of edges when the nearest point is an isolated vertex.
    std::size_t edge;
};
TreeProjection project_to_tree(const GeodesicTree& tree, const Point& p);

/// Tree on the centers of a sharpened system: every tree edge split at the
/// centers lying on it. Nodes are disk indices, one per distinct center.
struct SystemLink {
    std::size_t u;
    std::size_t v;
    std::size_t edge;
};
struct SystemTree {
    std::vector<std::size_t> nodes;
    std::vector<SystemLink> links;

    /// Lowest-index node of degree one and its neighbour.
    std::pair<std::size_t, std::size_t> leaf() const;
};
/// Throws domain errors unless every tree vertex carries a disk and every
/// center lies on the tree (within tol).
SystemTree subdivide_by_centers(const GeodesicTree& tree, std::span<const Disk> disks, double tol);

} // namespace kpg
