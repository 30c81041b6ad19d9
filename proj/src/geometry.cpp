#include "kpgeom/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace kpg {

std::string_view to_string(Model m)
{
    switch (m) {
    case Model::hyperbolic: return "hyperbolic";
    case Model::euclidean: return "euclidean";
    case Model::spherical: return "spherical";
    }
    return "unknown";
}

Model parse_model(std::string_view name)
{
    if (name == "hyperbolic" || name == "H2") return Model::hyperbolic;
    if (name == "euclidean" || name == "E2") return Model::euclidean;
    if (name == "spherical" || name == "S2") return Model::spherical;
    throw GeometryError(ErrorCode::parse, "unknown model '" + std::string(name) + "'");
}

Plane Plane::checked(Plane p)
{
    if (p.model != Model::euclidean && !(p.k > 0.0 && std::isfinite(p.k)))
        throw GeometryError(ErrorCode::domain, "curvature magnitude must be positive");
    return p;
}

namespace {

constexpr double kModelTolerance = 1e-8;

Mat3 reflection_x()
{
    Mat3 m;
    m(1, 1) = -1.0;
    return m;
}

// Frame at the foot of the origin on e, rotated so that angle 0 is the travel direction of e.
Mat3 line_frame(const Plane& plane, const Geodesic& e, Mat3* inverse)
{
    const int kappa = plane.kappa();
    const Vec3 a = um::project(kappa, e.normal, um::kOrigin);
    const um::Frame f = um::frame_at(kappa, a);
    const Vec3 wl = f.local_covector(e.normal);
    const double travel = std::atan2(wl.y, wl.x) - std::numbers::pi / 2.0;
    if (inverse) *inverse = um::rotation(-travel) * f.to_local;
    return f.to_world * um::rotation(travel);
}

} // namespace

bool is_valid(const Plane& plane, const Point& p)
{
    const Vec3& c = p.coords;
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z)) return false;
    switch (plane.model) {
    case Model::euclidean: return c.z == 1.0;
    case Model::hyperbolic: {
        const double q = form(-1, c, c) * plane.k * plane.k;
        return c.z > 0.0 && std::abs(q + 1.0) <= kModelTolerance * (1.0 + dot(c, c) * plane.k * plane.k);
    }
    case Model::spherical: return std::abs(dot(c, c) * plane.k * plane.k - 1.0) <= kModelTolerance;
    }
    return false;
}

void validate(const Plane& plane, const Point& p)
{
    if (!is_valid(plane, p))
        throw GeometryError(ErrorCode::domain,
                            "point is not on the " + std::string(to_string(plane.model)) + " model surface");
}

Point make_point(const Plane& plane, const Vec3& coords)
{
    Point p{coords};
    validate(plane, p);
    return p;
}

Vec3 to_unit(const Plane& plane, const Point& p)
{
    return p.coords * plane.scale();
}

Point from_unit(const Plane& plane, const Vec3& u)
{
    Vec3 v = um::normalize_point(plane.kappa(), u);
    if (plane.model == Model::euclidean) {
        v.z = 1.0;
        return {v};
    }
    return {v / plane.scale()};
}

Point origin(const Plane& plane)
{
    return from_unit(plane, um::kOrigin);
}

Point from_polar(const Plane& plane, double angle, double r)
{
    return from_unit(plane, um::polar_point(plane.kappa(), angle, plane.unit_len(r)));
}

double distance(const Plane& plane, const Point& p, const Point& q)
{
    validate(plane, p);
    validate(plane, q);
    return plane.len(um::distance(plane.kappa(), to_unit(plane, p), to_unit(plane, q)));
}

um::Polar polar_about(const Plane& plane, const Point& center, const Point& q)
{
    const int kappa = plane.kappa();
    const um::Frame f = um::frame_at(kappa, to_unit(plane, center));
    um::Polar pol = um::polar_of(kappa, f.local(to_unit(plane, q)));
    pol.dist = plane.len(pol.dist);
    return pol;
}

Point point_about(const Plane& plane, const Point& center, double angle, double r)
{
    const int kappa = plane.kappa();
    const um::Frame f = um::frame_at(kappa, to_unit(plane, center));
    return from_unit(plane, f.world(um::polar_point(kappa, angle, plane.unit_len(r))));
}

double angle_at(const Plane& plane, const Point& apex, const Point& a, const Point& b)
{
    const double alpha = polar_about(plane, apex, a).angle;
    const double beta = polar_about(plane, apex, b).angle;
    return std::abs(signed_angle(beta - alpha));
}

Geodesic geodesic_through(const Plane& plane, const Point& p, const Point& q)
{
    validate(plane, p);
    validate(plane, q);
    const int kappa = plane.kappa();
    const Vec3 a = to_unit(plane, p);
    const Vec3 b = to_unit(plane, q);
    const double d = um::distance(kappa, a, b);
    if (d <= plane.unit_len(plane.eps))
        throw GeometryError(ErrorCode::degenerate_geodesic, "geodesic through coincident points");
    if (kappa > 0 && std::abs(d - std::numbers::pi) <= 1e-9)
        throw GeometryError(ErrorCode::degenerate_geodesic, "geodesic through antipodal points");
    return {um::line_through(kappa, a, b)};
}

Point geodesic_point(const Plane& plane, const Point& p, const Point& q, double t)
{
    validate(plane, p);
    validate(plane, q);
    const int kappa = plane.kappa();
    const Vec3 a = to_unit(plane, p);
    const Vec3 b = to_unit(plane, q);
    const double d = um::distance(kappa, a, b);
    if (d <= plane.unit_len(plane.eps)) {
        if (t == 0.0 || t == 1.0) return t == 0.0 ? p : q;
        throw GeometryError(ErrorCode::degenerate_geodesic, "geodesic through coincident points");
    }
    if (kappa > 0 && std::abs(d - std::numbers::pi) <= 1e-9)
        throw GeometryError(ErrorCode::degenerate_geodesic, "geodesic through antipodal points");
    if (t == 0.0) return p;
    if (t == 1.0) return q;
    return from_unit(plane, um::interpolate(kappa, a, b, t));
}

Geodesic reversed(const Geodesic& e)
{
    return {-e.normal};
}

double point_geodesic_distance(const Plane& plane, const Point& p, const Geodesic& e)
{
    validate(plane, p);
    return plane.len(um::signed_distance(plane.kappa(), e.normal, to_unit(plane, p)));
}

Point project(const Plane& plane, const Point& p, const Geodesic& e)
{
    validate(plane, p);
    return from_unit(plane, um::project(plane.kappa(), e.normal, to_unit(plane, p)));
}

Geodesic perpendicular_at(const Plane& plane, const Point& p, double angle)
{
    const um::Frame f = um::frame_at(plane.kappa(), to_unit(plane, p));
    return {f.world_covector({-std::cos(angle), -std::sin(angle), 0.0})};
}

double sigma(const Plane& plane, double r)
{
    return plane.len(sn(plane.kappa(), plane.unit_len(r)));
}

double circle_perimeter(const Plane& plane, double r)
{
    if (!(r >= 0.0)) throw GeometryError(ErrorCode::domain, "negative radius");
    if (plane.kappa() > 0 && plane.unit_len(r) > std::numbers::pi)
        throw GeometryError(ErrorCode::domain, "spherical radius exceeds pi/k");
    return 2.0 * std::numbers::pi * sigma(plane, r);
}

double circle_area(const Plane& plane, double r)
{
    if (!(r >= 0.0)) throw GeometryError(ErrorCode::domain, "negative radius");
    if (plane.kappa() > 0 && plane.unit_len(r) > std::numbers::pi)
        throw GeometryError(ErrorCode::domain, "spherical radius exceeds pi/k");
    const double s = plane.scale();
    return um::disk_area(plane.kappa(), plane.unit_len(r)) / (s * s);
}

double circle_geodesic_curvature(const Plane& plane, double r)
{
    if (!(r >= 0.0)) throw GeometryError(ErrorCode::domain, "negative radius");
    if (r == 0.0) throw GeometryError(ErrorCode::infinite_curvature, "circle of radius 0");
    const int kappa = plane.kappa();
    const double u = plane.unit_len(r);
    // 1/tanh keeps the hyperbolic value >= k after rounding.
    if (kappa < 0) return plane.scale() / std::tanh(u);
    return plane.scale() * cs(kappa, u) / sn(kappa, u);
}

std::array<TangentData, 2> outer_common_tangents(const Plane& plane, const Disk& d1, const Disk& d2)
{
    validate(plane, d1.center);
    validate(plane, d2.center);
    const int kappa = plane.kappa();
    const Vec3 u1 = to_unit(plane, d1.center);
    const Vec3 u2 = to_unit(plane, d2.center);
    const double r1 = plane.unit_len(d1.radius);
    const double r2 = plane.unit_len(d2.radius);
    const double tol = plane.unit_len(plane.eps);
    const double d = um::distance(kappa, u1, u2);

    if (d <= tol) {
        if (std::abs(r1 - r2) <= tol)
            throw GeometryError(ErrorCode::infinite_family, "coincident disks have infinitely many tangents");
        throw GeometryError(ErrorCode::no_tangent, "concentric disks are nested");
    }
    if (d < std::abs(r1 - r2) - tol)
        throw GeometryError(ErrorCode::no_tangent, "one disk contains the other");

    const um::Frame f = um::frame_at(kappa, u1);
    const double phi = um::polar_of(kappa, f.local(u2)).angle;
    const Mat3 local_to_world = f.to_world * um::rotation(phi);

    const double a = (sn(kappa, r2) - sn(kappa, r1) * cs(kappa, d)) / sn(kappa, d);
    const double c1 = cs(kappa, r1);
    const double b = std::sqrt(std::max(0.0, c1 * c1 - a * a));

    std::array<TangentData, 2> out;
    for (int i = 0; i < 2; ++i) {
        const Vec3 wl{a, i == 0 ? b : -b, sn(kappa, r1)};
        // Covectors pull back through the inverse transpose of the point map.
        const Vec3 w = um::normalize_line(kappa, local_to_world.inverse().transposed() * wl);
        out[static_cast<std::size_t>(i)] = {Geodesic{w}, from_unit(plane, um::project(kappa, w, u1)),
                                            from_unit(plane, um::project(kappa, w, u2))};
    }
    return out;
}

Geodesic tangent_line(const Plane& plane, const Disk& disk, double angle)
{
    const int kappa = plane.kappa();
    const um::Frame f = um::frame_at(kappa, to_unit(plane, disk.center));
    return {f.world_covector(um::tangent_covector_local(kappa, plane.unit_len(disk.radius), angle))};
}

Isometry identity_isometry()
{
    return {};
}

Isometry reflect(const Plane& plane, const Geodesic& e)
{
    Mat3 inv;
    const Mat3 fw = line_frame(plane, e, &inv);
    const Mat3 m = fw * reflection_x() * inv;
    return {m, m.inverse(), false};
}

Isometry rotate_about(const Plane& plane, const Point& p, double angle)
{
    validate(plane, p);
    const um::Frame f = um::frame_at(plane.kappa(), to_unit(plane, p));
    return {f.to_world * um::rotation(angle) * f.to_local, f.to_world * um::rotation(-angle) * f.to_local, true};
}

Isometry translate_along(const Plane& plane, const Geodesic& e, double s)
{
    Mat3 inv;
    const Mat3 fw = line_frame(plane, e, &inv);
    const int kappa = plane.kappa();
    const double u = plane.unit_len(s);
    return {fw * um::translate_x(kappa, u) * inv, fw * um::translate_x(kappa, -u) * inv, true};
}

Isometry compose(const Isometry& outer, const Isometry& inner)
{
    return {outer.matrix * inner.matrix, inner.inverse * outer.inverse,
            outer.orientation_preserving == inner.orientation_preserving};
}

Point apply(const Plane& plane, const Isometry& f, const Point& p)
{
    validate(plane, p);
    return from_unit(plane, f.matrix * to_unit(plane, p));
}

Geodesic apply(const Isometry& f, const Geodesic& e)
{
    return {f.inverse.transposed() * e.normal};
}

double metric_residual(const Plane& plane, const Isometry& f)
{
    const Mat3& m = f.matrix;
    double worst = 0.0;
    if (plane.model == Model::euclidean) {
        worst = std::max({std::abs(m(2, 0)), std::abs(m(2, 1)), std::abs(m(2, 2) - 1.0)});
        const double c00 = m(0, 0) * m(0, 0) + m(1, 0) * m(1, 0) - 1.0;
        const double c11 = m(0, 1) * m(0, 1) + m(1, 1) * m(1, 1) - 1.0;
        const double c01 = m(0, 0) * m(0, 1) + m(1, 0) * m(1, 1);
        return std::max({worst, std::abs(c00), std::abs(c11), std::abs(c01)});
    }
    const double g[3] = {1.0, 1.0, static_cast<double>(plane.kappa())};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int r = 0; r < 3; ++r) s += m(r, i) * g[r] * m(r, j);
            worst = std::max(worst, std::abs(s - (i == j ? g[i] : 0.0)));
        }
    }
    return worst;
}

namespace {

um::Frame antipode_frame(const Plane& sphere, const Point& pole)
{
    if (sphere.model != Model::spherical)
        throw GeometryError(ErrorCode::domain, "stereographic projection needs a spherical plane");
    validate(sphere, pole);
    return um::frame_at(1, -to_unit(sphere, pole));
}

} // namespace

Point stereographic_project(const Plane& sphere, const Point& pole, const Point& x)
{
    const um::Frame f = antipode_frame(sphere, pole);
    validate(sphere, x);
    const um::Polar pol = um::polar_of(1, f.local(to_unit(sphere, x)));
    if (pol.dist > std::numbers::pi - 1e-7)
        throw GeometryError(ErrorCode::pole_proximity, "point too close to the projection pole");
    const double r = std::tan(0.5 * pol.dist) / sphere.k;
    return {{r * std::cos(pol.angle), r * std::sin(pol.angle), 1.0}};
}

Point stereographic_lift(const Plane& sphere, const Point& pole, const Point& planar)
{
    const um::Frame f = antipode_frame(sphere, pole);
    const double x = planar.coords.x * sphere.k;
    const double y = planar.coords.y * sphere.k;
    const double s = 2.0 * std::atan(std::hypot(x, y));
    return from_unit(sphere, f.world(um::polar_point(1, std::atan2(y, x), s)));
}

Disk stereographic_project_disk(const Plane& sphere, const Point& pole, const Disk& cap)
{
    const um::Frame f = antipode_frame(sphere, pole);
    const um::Polar pol = um::polar_of(1, f.local(to_unit(sphere, cap.center)));
    const double r = sphere.unit_len(cap.radius);
    if (pol.dist + r >= std::numbers::pi - 1e-9)
        throw GeometryError(ErrorCode::pole_proximity, "cap contains the projection pole");
    const double t1 = std::tan(0.5 * (pol.dist + r));
    const double t2 = std::tan(0.5 * (pol.dist - r));
    const double c = 0.5 * (t1 + t2) / sphere.k;
    return {{{c * std::cos(pol.angle), c * std::sin(pol.angle), 1.0}}, 0.5 * (t1 - t2) / sphere.k};
}

Disk stereographic_lift_disk(const Plane& sphere, const Point& pole, const Disk& disk)
{
    const um::Frame f = antipode_frame(sphere, pole);
    const double x = disk.center.coords.x * sphere.k;
    const double y = disk.center.coords.y * sphere.k;
    const double m = std::hypot(x, y);
    const double rho = disk.radius * sphere.k;
    const double s1 = 2.0 * std::atan(m + rho);
    const double s2 = 2.0 * std::atan(m - rho);
    const double theta = m > 0.0 ? std::atan2(y, x) : 0.0;
    const Point c = from_unit(sphere, f.world(um::polar_point(1, theta, 0.5 * (s1 + s2))));
    return {c, sphere.len(0.5 * (s1 - s2))};
}

Point to_poincare(const Plane& hyperbolic, const Point& p)
{
    const Vec3 u = to_unit(hyperbolic, p);
    return {{u.x / (1.0 + u.z), u.y / (1.0 + u.z), 1.0}};
}

Point from_poincare(const Plane& hyperbolic, double x, double y)
{
    const double r2 = x * x + y * y;
    if (r2 >= 1.0) throw GeometryError(ErrorCode::domain, "point outside the Poincare disk");
    return from_unit(hyperbolic, Vec3{2.0 * x, 2.0 * y, 1.0 + r2} / (1.0 - r2));
}

Disk poincare_disk(const Plane& hyperbolic, const Disk& d)
{
    const um::Polar pol = um::polar_of(-1, to_unit(hyperbolic, d.center));
    const double r = hyperbolic.unit_len(d.radius);
    const double ta = std::tanh(0.5 * (pol.dist + r));
    const double tb = std::tanh(0.5 * (pol.dist - r));
    const double c = 0.5 * (ta + tb);
    return {{{c * std::cos(pol.angle), c * std::sin(pol.angle), 1.0}}, 0.5 * (ta - tb)};
}

} // namespace kpg
