#pragma once

// Central set of U = conv(D_1 u ... u D_n): the tree of centers of maximal
// inscribed disks, sharpened systems and the leaf decomposition used by the
// perimeter induction.

#include <cstddef>
#include <cstdint>

#include "kpgeom/disk_hull.hpp"
#include "kpgeom/tree.hpp"

namespace kpg {

/// Distance from p to the boundary of the hull region; throws if p is outside.
double inscribed_radius(const BoundaryChain& chain, const Point& p);

/// Vertex contacts are indices into chain.pieces; edge generators are the two
/// segment pieces whose lines the edge bisects.
GeodesicTree central_tree(const BoundaryChain& chain);

/// Radius of the maximal disk centered at a point of an edge.
double central_radius_on_edge(const BoundaryChain& chain, const TreeEdge& edge, const Point& p);

/// Every disk replaced by a maximal disk of U containing it, plus the disks of
/// all tree vertices. Duplicates are removed; replacements keep input order.
Configuration sharpen(const Configuration& config);

struct DecompositionReport {
    std::size_t leaf = 0;       // D_k
    std::size_t neighbor = 0;   // D_{k-1}
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::size_t y_mismatch = 0;         // union of disks on the leaf edge vs conv(D_{k-1} u D_k)
    std::size_t x_mismatch = 0;         // union of disks on the rest of the tree vs conv(D_i, i != k)
    std::size_t overlap_mismatch = 0;   // U_X cap U_Y vs D_{k-1}
    std::size_t cover_mismatch = 0;     // U vs U_X cup U_Y
    double perimeter_residual = 0.0;    // per(U) - per(U_X) - per(U_Y) + per(D_{k-1})
    bool pass = false;
};

/// Checks the leaf decomposition of a sharpened system by indicator sampling.
DecompositionReport tree_decomposition_check(const Configuration& sharpened, std::size_t samples = 10000,
                                             std::uint64_t seed = 1);

} // namespace kpg
