#pragma once

// Unit-model primitives shared by the geometry modules. Points are vectors on
// the unit hyperboloid / affine chart / unit sphere; geodesics are covectors w
// with w.x^2 + w.y^2 + kappa w.z^2 = 1, so that sn(signed distance) = w . u.

#include <optional>

#include "kpgeom/linalg.hpp"
#include "kpgeom/plane.hpp"

namespace kpg::um {

/// Origin (0, 0, 1) of the unit model.
inline constexpr Vec3 kOrigin{0.0, 0.0, 1.0};

Vec3 polar_point(int kappa, double angle, double dist);
Mat3 translate_x(int kappa, double dist);
Mat3 rotation(double angle);

/// Pulls a vector back onto the model surface (repairs rounding drift).
Vec3 normalize_point(int kappa, const Vec3& u);

double distance(int kappa, const Vec3& a, const Vec3& b);

/// Orientation-preserving frame at a point: to_world maps the origin to the point.
/// Angle 0 of the frame points away from the model origin.
struct Frame {
    Mat3 to_world;
    Mat3 to_local;

    Vec3 local(const Vec3& u) const { return to_local * u; }
    Vec3 world(const Vec3& u) const { return to_world * u; }
    /// Covector expressed in local coordinates.
    Vec3 local_covector(const Vec3& w) const { return to_world.transposed() * w; }
    Vec3 world_covector(const Vec3& w) const { return to_local.transposed() * w; }
};

Frame frame_at(int kappa, const Vec3& p);

struct Polar {
    double angle;
    double dist;
};

/// Polar coordinates of a local-frame vector about the origin.
Polar polar_of(int kappa, const Vec3& local);

inline double signed_distance(int kappa, const Vec3& w, const Vec3& u) { return asn(kappa, dot(w, u)); }

/// Covector normalized to unit length; the geodesic it defines is unchanged.
Vec3 normalize_line(int kappa, const Vec3& w);

/// Oriented geodesic from a to b; positive side is on the left.
Vec3 line_through(int kappa, const Vec3& a, const Vec3& b);

Vec3 project(int kappa, const Vec3& w, const Vec3& u);

Vec3 interpolate(int kappa, const Vec3& a, const Vec3& b, double t);

/// Intersection point of two geodesics; for the sphere the solution closer to `near`.
std::optional<Vec3> intersect_lines(int kappa, const Vec3& w1, const Vec3& w2, const Vec3& near);

/// Supporting geodesic of the circle (center frame, radius) at the given angle,
/// oriented with the disk on the positive side.
Vec3 tangent_covector_local(int kappa, double radius, double angle);

/// Direction angle (in the frame of `center`) of the foot of the perpendicular
/// dropped from `center` onto the geodesic w, assuming center is on the positive side.
double foot_angle(int kappa, const Frame& center_frame, const Vec3& w);

/// Geodesic triangle area (signed by orientation) in the unit model.
double triangle_area(int kappa, const Vec3& a, const Vec3& b, const Vec3& c);

/// Area of a disk of unit-model radius r.
double disk_area(int kappa, double r);

} // namespace kpg::um
