#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "kpgeom/central_set.hpp"
#include "kpgeom/disk_hull.hpp"
#include "kpgeom/rng.hpp"

namespace kpg::testing {

inline Plane plane_of(Model m)
{
    switch (m) {
    case Model::hyperbolic: return Plane::hyperbolic(1.0);
    case Model::spherical: return Plane::spherical(1.0);
    default: return Plane::euclidean();
    }
}

inline const Model kAllModels[] = {Model::hyperbolic, Model::euclidean, Model::spherical};

/// Point at a uniformly random direction and distance in [0, max_dist] from the origin.
inline Point random_point(const Plane& plane, CounterRng& rng, double max_dist)
{
    return from_polar(plane, rng.angle(), rng.uniform(0.0, max_dist));
}

/// n disks with centers within `reach` of the origin and radii in [0, rmax].
inline std::vector<Disk> random_disks(const Plane& plane, CounterRng& rng, int n, double reach, double rmax)
{
    std::vector<Disk> disks;
    for (int i = 0; i < n; ++i) {
        const Point c = random_point(plane, rng, reach);
        disks.push_back({c, rng.uniform(0.0, rmax)});
    }
    return disks;
}

inline double rel_err(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

/// Projective chart centered at `pole` (Klein / affine / gnomonic) in which
/// geodesics are straight lines.
struct ProjectiveChart {
    int kappa;
    um::Frame frame;

    ProjectiveChart(const Plane& plane, const Point& pole)
        : kappa(plane.kappa()), frame(um::frame_at(plane.kappa(), to_unit(plane, pole))) {}

    std::array<double, 2> operator()(const Vec3& u) const
    {
        const Vec3 l = frame.local(u);
        return {l.x / l.z, l.y / l.z};
    }
    Vec3 back(const std::array<double, 2>& x) const
    {
        return frame.world(um::normalize_point(kappa, Vec3{x[0], x[1], 1.0}));
    }
};

/// Indices of the convex hull of planar points, counter-clockwise (monotone chain).
inline std::vector<std::size_t> planar_hull(const std::vector<std::array<double, 2>>& pts)
{
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) - (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
    };
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], i) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
        const std::size_t i = idx[j];
        while (k >= t && turn(h[k - 2], h[k - 1], i) <= 0) --k;
        h[k++] = i;
    }
    h.resize(k > 1 ? k - 1 : k);
    return h;
}

/// Perimeter of the geodesic polygon spanned by n samples on each circle, the
/// hull being taken in a projective chart around `pole`.
inline double polygonal_hull_perimeter(const Plane& plane, std::span<const Disk> disks, int per_disk, const Point& pole)
{
    const int kappa = plane.kappa();
    const ProjectiveChart chart(plane, pole);
    std::vector<Vec3> units;
    std::vector<std::array<double, 2>> pts;
    for (const Disk& d : disks) {
        const um::Frame f = um::frame_at(kappa, to_unit(plane, d.center));
        const int n = d.radius > 0 ? per_disk : 1;
        for (int i = 0; i < n; ++i) {
            const Vec3 u = f.world(um::polar_point(kappa, 2 * std::numbers::pi * i / n, plane.unit_len(d.radius)));
            units.push_back(u);
            pts.push_back(chart(u));
        }
    }
    const auto h = planar_hull(pts);
    double total = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) total += um::distance(kappa, units[h[i]], units[h[(i + 1) % h.size()]]);
    return plane.len(total);
}

/// Distance from p to the boundary chain, piece by piece (arc: radial distance
/// when p's direction falls in the arc, else the nearer endpoint; segment:
/// perpendicular distance when the foot falls inside, else the nearer endpoint).
inline double piecewise_boundary_distance(const BoundaryChain& chain, const Point& p)
{
    const Plane& plane = chain.plane;
    double best = 1e300;
    for (const Piece& piece : chain.pieces) {
        const Point s = piece_start(chain, piece);
        const Point e = piece_end(chain, piece);
        double d = std::min(distance(plane, p, s), distance(plane, p, e));
        if (const auto* a = std::get_if<Arc>(&piece)) {
            const um::Polar pol = polar_about(plane, a->disk.center, p);
            const double off = wrap_angle(pol.angle - a->start_angle);
            if (off <= a->span() || a->span() >= 2 * std::numbers::pi - 1e-12) d = std::min(d, std::abs(pol.dist - a->disk.radius));
        } else {
            const Segment& seg = std::get<Segment>(piece);
            const double len = distance(plane, s, e);
            if (len > 0) {
                const Point f = project(plane, p, seg.line);
                if (distance(plane, s, f) + distance(plane, f, e) <= len + 1e-12)
                    d = std::min(d, std::abs(point_geodesic_distance(plane, p, seg.line)));
            }
        }
        best = std::min(best, d);
    }
    return best;
}

/// Brute-force central-set vertices of a euclidean hull on the grid
/// x0 + i*step, y0 + j*step (0 <= i, j <= n): a grid point carries a maximal
/// disk when no neighbouring grid disk contains its inscribed disk (up to the
/// 0.2 * step slack that off-grid containment directions need); vertices
/// are maximal points with one or at least three maximal 8-neighbours.
inline std::vector<std::array<double, 2>> grid_central_vertices(const BoundaryChain& chain, double x0, double y0,
                                                                double step, int n)
{
    const int m = n + 1;
    std::vector<double> r(static_cast<std::size_t>(m * m), -1.0);
    auto at = [&](int i, int j) -> double& { return r[static_cast<std::size_t>(i * m + j)]; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Point p{{x0 + i * step, y0 + j * step, 1.0}};
            if (support_margin(chain, p) >= 0.0) at(i, j) = piecewise_boundary_distance(chain, p);
        }
    std::vector<char> maximal(r.size(), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (at(i, j) < 0) continue;
            bool covered = false;
            for (int di = -1; di <= 1 && !covered; ++di)
                for (int dj = -1; dj <= 1 && !covered; ++dj) {
                    const int a = i + di, b = j + dj;
                    if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= m || b >= m || at(a, b) < 0) continue;
                    covered = std::hypot(di * step, dj * step) <= at(a, b) - at(i, j) + 0.2 * step;
                }
            maximal[static_cast<std::size_t>(i * m + j)] = !covered;
        }
    std::vector<std::array<double, 2>> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!maximal[static_cast<std::size_t>(i * m + j)]) continue;
            int nb = 0;
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int a = i + di, b = j + dj;
                    if ((di || dj) && a >= 0 && b >= 0 && a < m && b < m) nb += maximal[static_cast<std::size_t>(a * m + b)];
                }
            if (nb == 1 || nb >= 3) out.push_back({x0 + i * step, y0 + j * step});
        }
    return out;
}

/// Four unit disks at the corners of a 4 x 4 square.
inline std::vector<Disk> square_of_four()
{
    return {{Point{{0, 0, 1}}, 1.0}, {Point{{4, 0, 1}}, 1.0}, {Point{{4, 4, 1}}, 1.0}, {Point{{0, 4, 1}}, 1.0}};
}

// Number of tangency directions of B(v, rho) with the boundary: clusters of
// boundary samples within rho + slack; extended clusters (arc contact) count twice.
inline int tangency_count(const BoundaryChain& chain, const Point& v, double rho)
{
    const auto pts = sample_boundary(chain, 3000);
    const double slack = 1e-6;
    std::vector<char> near(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) near[i] = distance(chain.plane, v, pts[i]) <= rho + slack;
    std::size_t first = 0;
    while (first < pts.size() && near[first]) ++first;
    if (first == pts.size()) return 2;
    int count = 0;
    for (std::size_t k = 1; k <= pts.size(); ++k) {
        const std::size_t i = (first + k) % pts.size();
        if (!near[i]) continue;
        std::size_t j = i;
        while (near[(j + 1) % pts.size()]) j = (j + 1) % pts.size();
        count += distance(chain.plane, pts[i], pts[j]) > 1e-4 ? 2 : 1;
        k += (j + pts.size() - i) % pts.size();
    }
    return count;
}

inline Configuration random_sharpened(const Plane& plane, CounterRng& rng)
{
    const int n = static_cast<int>(rng.integer(2, 6));
    const auto disks = random_disks(plane, rng, n, plane.model == Model::spherical ? 0.5 : 1.5, 1.0);
    return sharpen({plane, disks});
}

} // namespace kpg::testing
