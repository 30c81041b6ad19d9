#pragma once

// Points, geodesics, distances, isometries, circles and tangents in the three
// constant-curvature planes. All functions are pure.

#include <array>

#include "kpgeom/linalg.hpp"
#include "kpgeom/plane.hpp"
#include "kpgeom/unit_model.hpp"

namespace kpg {

// ---------------------------------------------------------------------------
// Points

/// Throws GeometryError(domain) unless p satisfies the model equation of the plane.
void validate(const Plane& plane, const Point& p);
bool is_valid(const Plane& plane, const Point& p);

/// Builds a point from model coordinates, validating them.
Point make_point(const Plane& plane, const Vec3& coords);

Vec3 to_unit(const Plane& plane, const Point& p);
/// Inverse of to_unit; re-projects onto the model surface.
Point from_unit(const Plane& plane, const Vec3& u);

Point origin(const Plane& plane);
/// Point at intrinsic distance r from the origin in direction `angle`.
Point from_polar(const Plane& plane, double angle, double r);

double distance(const Plane& plane, const Point& p, const Point& q);

/// Polar coordinates (angle, intrinsic distance) of q seen from center, in the
/// canonical frame at center.
um::Polar polar_about(const Plane& plane, const Point& center, const Point& q);
Point point_about(const Plane& plane, const Point& center, double angle, double r);
/// Unsigned angle a-apex-b in [0, pi].
double angle_at(const Plane& plane, const Point& apex, const Point& a, const Point& b);

// ---------------------------------------------------------------------------
// Geodesics

/// Oriented complete geodesic. `normal` is the unit covector of the unit model:
/// sn(k * signed distance) = normal . u, positive side on the left of travel.
struct Geodesic {
    Vec3 normal;
};

Geodesic geodesic_through(const Plane& plane, const Point& p, const Point& q);
Point geodesic_point(const Plane& plane, const Point& p, const Point& q, double t);
Geodesic reversed(const Geodesic& e);
double point_geodesic_distance(const Plane& plane, const Point& p, const Geodesic& e);
/// Orthogonal projection (foot of the perpendicular).
Point project(const Plane& plane, const Point& p, const Geodesic& e);
/// Geodesic through p, perpendicular to the direction `angle` of p's frame;
/// positive side is the one the direction points away from.
Geodesic perpendicular_at(const Plane& plane, const Point& p, double angle);

// ---------------------------------------------------------------------------
// Circles

/// Circumference factor sn(rk)/k; a circle of radius r has perimeter 2 pi sigma(r).
double sigma(const Plane& plane, double r);
double circle_perimeter(const Plane& plane, double r);
double circle_area(const Plane& plane, double r);
double circle_geodesic_curvature(const Plane& plane, double r);

struct TangentData {
    Geodesic line;
    Point foot1;
    Point foot2;
};

/// The two outer common tangents. Element 0 has both disks on its positive
/// side with the travel direction from D1 towards D2 (the counter-clockwise
/// hull side); element 1 is its mirror image across the line of centers.
std::array<TangentData, 2> outer_common_tangents(const Plane& plane, const Disk& d1, const Disk& d2);

/// Supporting geodesic of a disk at boundary direction `angle`; disk on positive side.
Geodesic tangent_line(const Plane& plane, const Disk& disk, double angle);

// ---------------------------------------------------------------------------
// Isometries

struct Isometry {
    Mat3 matrix;
    Mat3 inverse;
    bool orientation_preserving = true;
};

Isometry identity_isometry();
Isometry reflect(const Plane& plane, const Geodesic& e);
Isometry rotate_about(const Plane& plane, const Point& p, double angle);
/// Translation along e by arclength s in the direction of travel of e.
Isometry translate_along(const Plane& plane, const Geodesic& e, double s);
Isometry compose(const Isometry& outer, const Isometry& inner);
Point apply(const Plane& plane, const Isometry& f, const Point& p);
Geodesic apply(const Isometry& f, const Geodesic& e);
/// Largest residual of M^T G M = G for the model metric G.
double metric_residual(const Plane& plane, const Isometry& f);

// ---------------------------------------------------------------------------
// Stereographic projection of a spherical plane from a pole onto the euclidean
// plane: the pole goes to infinity, its antipode to the origin and the equator
// of the pole to the circle of radius 1/k.

Point stereographic_project(const Plane& sphere, const Point& pole, const Point& x);
Point stereographic_lift(const Plane& sphere, const Point& pole, const Point& planar);
/// Image of a spherical cap not containing the pole.
Disk stereographic_project_disk(const Plane& sphere, const Point& pole, const Disk& cap);
Disk stereographic_lift_disk(const Plane& sphere, const Point& pole, const Disk& disk);

// ---------------------------------------------------------------------------
// Poincare disk chart of the hyperbolic plane (unit disk, scale-free).

Point to_poincare(const Plane& hyperbolic, const Point& p);
Point from_poincare(const Plane& hyperbolic, double x, double y);
/// Euclidean image of a hyperbolic disk in the Poincare chart.
Disk poincare_disk(const Plane& hyperbolic, const Disk& d);

} // namespace kpg
