#include "kpgeom/unit_model.hpp"

#include <cmath>
#include <numbers>

namespace kpg::um {

Vec3 polar_point(int kappa, double angle, double dist)
{
    const double s = sn(kappa, dist);
    return {s * std::cos(angle), s * std::sin(angle), cs(kappa, dist)};
}

Mat3 translate_x(int kappa, double dist)
{
    const double s = sn(kappa, dist);
    const double c = cs(kappa, dist);
    Mat3 m;
    m(0, 0) = c;
    m(0, 2) = s;
    m(2, 0) = -kappa * s;
    m(2, 2) = c;
    return m;
}

Mat3 rotation(double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 m;
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

Vec3 normalize_point(int kappa, const Vec3& u)
{
    if (kappa == 0) return u / u.z;
    if (kappa > 0) return u / norm(u);
    const double q = -form(-1, u, u);
    Vec3 v = u / std::sqrt(q);
    return v.z < 0.0 ? -v : v;
}

double distance(int kappa, const Vec3& a, const Vec3& b)
{
    const Vec3 d = a - b;
    const double chord2 = std::max(0.0, form(kappa, d, d));
    if (kappa > 0) {
        // atan2 form stays accurate near antipodal pairs.
        return std::atan2(norm(cross(a, b)), dot(a, b));
    }
    return 2.0 * asn(kappa, 0.5 * std::sqrt(chord2));
}

Polar polar_of(int kappa, const Vec3& local)
{
    return {std::atan2(local.y, local.x), distance(kappa, kOrigin, local)};
}

Frame frame_at(int kappa, const Vec3& p)
{
    const Polar pol = polar_of(kappa, p);
    return {rotation(pol.angle) * translate_x(kappa, pol.dist),
            translate_x(kappa, -pol.dist) * rotation(-pol.angle)};
}

Vec3 normalize_line(int kappa, const Vec3& w)
{
    const double n2 = w.x * w.x + w.y * w.y + kappa * w.z * w.z;
    return w / std::sqrt(n2);
}

Vec3 line_through(int kappa, const Vec3& a, const Vec3& b)
{
    return normalize_line(kappa, cross(a, b));
}

Vec3 project(int kappa, const Vec3& w, const Vec3& u)
{
    const double f = dot(w, u);
    const Vec3 n{w.x, w.y, kappa * w.z};
    return normalize_point(kappa, (u - n * f) / std::sqrt(1.0 - kappa * f * f));
}

Vec3 interpolate(int kappa, const Vec3& a, const Vec3& b, double t)
{
    const double d = distance(kappa, a, b);
    if (d == 0.0) return a;
    const double s = sn(kappa, d);
    return normalize_point(kappa, (a * sn(kappa, (1.0 - t) * d) + b * sn(kappa, t * d)) / s);
}

std::optional<Vec3> intersect_lines(int kappa, const Vec3& w1, const Vec3& w2, const Vec3& near)
{
    Vec3 u = cross(w1, w2);
    if (kappa == 0) {
        if (std::abs(u.z) < 1e-300 || std::abs(u.z) < 1e-14 * norm(u)) return std::nullopt;
        return u / u.z;
    }
    if (kappa > 0) {
        const double n = norm(u);
        if (n == 0.0) return std::nullopt;
        u = u / n;
        return dot(u, near) >= 0.0 ? u : -u;
    }
    const double q = -form(-1, u, u);
    if (q <= 1e-14 * dot(u, u)) return std::nullopt;
    return normalize_point(-1, u);
}

Vec3 tangent_covector_local(int kappa, double radius, double angle)
{
    const double c = cs(kappa, radius);
    return {-c * std::cos(angle), -c * std::sin(angle), sn(kappa, radius)};
}

double foot_angle(int kappa, const Frame& center_frame, const Vec3& w)
{
    (void)kappa;
    const Vec3 wl = center_frame.local_covector(w);
    return std::atan2(-wl.y, -wl.x);
}

double triangle_area(int kappa, const Vec3& a, const Vec3& b, const Vec3& c)
{
    const double d = det(a, b, c);
    if (kappa == 0) return 0.5 * d;
    // Van Oosterom-Strackee style formula; for the hyperboloid the cosines are
    // the (positive) hyperbolic cosines of the side lengths.
    auto cosine = [kappa](const Vec3& p, const Vec3& q) {
        return kappa > 0 ? dot(p, q) : -form(-1, p, q);
    };
    const double denom = 1.0 + cosine(a, b) + cosine(b, c) + cosine(c, a);
    return 2.0 * std::atan2(d, denom);
}

double disk_area(int kappa, double r)
{
    if (kappa == 0) return std::numbers::pi * r * r;
    // 2 pi (1 - cs(r)) / kappa, written to avoid cancellation for small r.
    const double h = sn(kappa, 0.5 * r);
    return 4.0 * std::numbers::pi * h * h;
}

} // namespace kpg::um
