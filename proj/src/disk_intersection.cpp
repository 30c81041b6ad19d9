#include "kpgeom/disk_intersection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace kpg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

using Intervals = std::vector<std::pair<double, double>>;

Intervals intersect(const Intervals& a, const Intervals& b)
{
    Intervals out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double lo = std::max(a[i].first, b[j].first);
        const double hi = std::min(a[i].second, b[j].second);
        if (lo <= hi) out.emplace_back(lo, hi);
        if (a[i].second < b[j].second) ++i;
        else ++j;
    }
    return out;
}

// Directions theta of the circle (radius R about the origin) lying in the disk
// of radius r whose center is at polar (phi, D); all lengths in the unit model.
Intervals inside_directions(int kappa, double R, double phi, double D, double r)
{
    double c;
    if (kappa == 0) c = (R * R + D * D - r * r) / (2.0 * R * D);
    else c = (cs(kappa, R) * cs(kappa, D) - cs(kappa, r)) / (-kappa * sn(kappa, R) * sn(kappa, D));
    if (c <= -1.0) return {{0.0, kTwoPi}};
    if (c > 1.0) return {};
    const double half = std::acos(c);
    const double a = wrap_angle(phi - half);
    const double b = a + 2.0 * half;
    if (b <= kTwoPi) return {{a, b}};
    return {{0.0, b - kTwoPi}, {a, kTwoPi}};
}

struct UnitDisk {
    Vec3 c;
    double r;
};

double minimax_value(int kappa, const std::vector<UnitDisk>& ud, const Vec3& u)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const UnitDisk& d : ud) worst = std::max(worst, um::distance(kappa, u, d.c) - d.r);
    return worst;
}

template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi)
{
    constexpr double g = 0.6180339887498949;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    const double stop = 1e-13 * (1.0 + std::abs(lo) + std::abs(hi));
    for (int it = 0; it < 100 && hi - lo > stop; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

} // namespace

Witness is_nonempty(const Configuration& config)
{
    validate_configuration(config);
    const Plane& plane = config.plane;
    const int kappa = plane.kappa();
    std::vector<UnitDisk> ud;
    Vec3 sum{};
    for (const Disk& d : config.disks) {
        ud.push_back({to_unit(plane, d.center), plane.unit_len(d.radius)});
        sum += ud.back().c;
    }
    Vec3 o;
    if (kappa > 0) o = to_unit(plane, *hemisphere_certificate(plane, config.disks));
    else o = um::normalize_point(kappa, sum);

    // Projective chart at o (Klein / affine / gnomonic): disks are convex there,
    // so the minimax function is quasiconvex in each coordinate and in the
    // partial minimum over y.
    const um::Frame f = um::frame_at(kappa, o);
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const UnitDisk& d : ud) {
        const Vec3 l = f.local(d.c);
        x0 = std::min(x0, l.x / l.z);
        x1 = std::max(x1, l.x / l.z);
        y0 = std::min(y0, l.y / l.z);
        y1 = std::max(y1, l.y / l.z);
    }
    auto lift = [&](double x, double y) { return f.world(um::normalize_point(kappa, Vec3{x, y, 1.0})); };
    auto inner = [&](double x) {
        return golden_min([&](double y) { return minimax_value(kappa, ud, lift(x, y)); }, y0, y1);
    };
    const auto [bx, bv] = golden_min([&](double x) { return inner(x).second; }, x0, x1);
    const auto [by, value] = inner(bx);
    (void)bv;
    const double v = plane.len(value);
    return {v <= 1e-10, from_unit(plane, lift(bx, by)), v};
}

IntersectionRegion intersect_disks(const Configuration& config)
{
    validate_configuration(config);
    const Plane& plane = config.plane;
    const int kappa = plane.kappa();
    const double tol = plane.unit_len(plane.eps);
    IntersectionRegion region;
    region.plane = plane;
    region.disks = config.disks;
    region.chain.plane = plane;

    const std::size_t n = config.disks.size();
    std::vector<UnitDisk> ud;
    for (const Disk& d : config.disks) ud.push_back({to_unit(plane, d.center), plane.unit_len(d.radius)});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (um::distance(kappa, ud[i].c, ud[j].c) > ud[i].r + ud[j].r + tol) {
                region.empty_flag = true;
                return region;
            }

    // A disk inside every other disk is the whole region (lowest index among equals).
    for (std::size_t i = 0; i < n; ++i) {
        bool inside_all = true;
        for (std::size_t j = 0; j < n && inside_all; ++j)
            if (j != i && um::distance(kappa, ud[i].c, ud[j].c) > ud[j].r - ud[i].r + tol) inside_all = false;
        if (!inside_all) continue;
        region.full_disk_flag = true;
        region.full_index = i;
        if (ud[i].r == 0.0) {
            region.vertices.push_back(config.disks[i].center);
            return region;
        }
        region.chain.pieces.push_back(Arc{i, config.disks[i], 0.0, kTwoPi});
        return region;
    }

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        if (ud[i].r == 0.0) continue;
        const um::Frame f = um::frame_at(kappa, ud[i].c);
        Intervals set{{0.0, kTwoPi}};
        for (std::size_t j = 0; j < n && !set.empty(); ++j) {
            if (j == i) continue;
            const um::Polar pol = um::polar_of(kappa, f.local(ud[j].c));
            // Containment up to eps either way adds no constraint or removes the
            // whole circle; near-identical disks keep the lower index.
            const bool i_in_j = pol.dist + ud[i].r <= ud[j].r + tol;
            const bool j_in_i = pol.dist + ud[j].r <= ud[i].r + tol;
            if (i_in_j && j_in_i) {
                if (j < i) set.clear();
                continue;
            }
            if (i_in_j) continue;
            if (j_in_i) {
                set.clear();
                continue;
            }
            set = intersect(set, inside_directions(kappa, ud[i].r, pol.angle, pol.dist, ud[j].r));
        }
        if (set.size() > 1 && set.front().first == 0.0 && set.back().second == kTwoPi) {
            set.back().second = kTwoPi + set.front().second;
            set.erase(set.begin());
        }
        for (const auto& [a, b] : set)
            if ((b - a) * sn(kappa, ud[i].r) > 1e-10) arcs.push_back(Arc{i, config.disks[i], a, b});
    }

    if (arcs.empty()) {
        // No boundary arcs: either a single tangency point or nothing at all.
        const Witness w = is_nonempty(config);
        if (w.nonempty) region.vertices.push_back(w.point);
        else region.empty_flag = true;
        return region;
    }

    // Order arcs by chaining each end to the nearest start.
    std::vector<Vec3> starts, ends;
    for (const Arc& a : arcs) {
        const um::Frame f = um::frame_at(kappa, ud[a.disk_index].c);
        starts.push_back(f.world(um::polar_point(kappa, a.start_angle, ud[a.disk_index].r)));
        ends.push_back(f.world(um::polar_point(kappa, a.end_angle, ud[a.disk_index].r)));
    }
    std::vector<char> used(arcs.size(), 0);
    std::size_t cur = 0;
    used[0] = 1;
    region.chain.pieces.push_back(arcs[0]);
    region.vertices.push_back(from_unit(plane, starts[0]));
    for (std::size_t step = 1; step < arcs.size(); ++step) {
        std::size_t best = arcs.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            if (used[k]) continue;
            const double d = um::distance(kappa, ends[cur], starts[k]);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        used[best] = 1;
        cur = best;
        region.chain.pieces.push_back(arcs[cur]);
        region.vertices.push_back(from_unit(plane, starts[cur]));
    }
    check_chain(region.chain);
    return region;
}

double region_area_by_caps(const IntersectionRegion& region)
{
    if (region.empty_flag || region.chain.pieces.empty()) return 0.0;
    return chain_area(region.chain);
}

double region_area(const IntersectionRegion& region)
{
    if (region.empty_flag || region.chain.pieces.empty()) return 0.0;
    const Plane& plane = region.plane;
    const int kappa = plane.kappa();
    if (kappa == 0) return chain_area(region.chain);
    if (region.full_disk_flag) return circle_area(plane, region.disks[region.full_index].radius);

    // Gauss-Bonnet: curvature * area = 2 pi - sum kappa_g * length - sum exterior angles.
    const auto& pieces = region.chain.pieces;
    double turning = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Arc& a = std::get<Arc>(pieces[i]);
        const Arc& b = std::get<Arc>(pieces[(i + 1) % pieces.size()]);
        turning += cs(kappa, plane.unit_len(a.disk.radius)) * a.span();
        const Vec3 ca = to_unit(plane, a.disk.center);
        const um::Frame fa = um::frame_at(kappa, ca);
        const Vec3 q = fa.world(um::polar_point(kappa, a.end_angle, plane.unit_len(a.disk.radius)));
        const um::Frame fq = um::frame_at(kappa, q);
        const double beta_a = um::polar_of(kappa, fq.local(ca)).angle;
        const double beta_b = um::polar_of(kappa, fq.local(to_unit(plane, b.disk.center))).angle;
        turning += signed_angle(beta_b - beta_a);
    }
    const double unit_area = (kTwoPi - turning) / kappa;
    const double s = plane.scale();
    return std::max(0.0, unit_area) / (s * s);
}

bool region_contains(const IntersectionRegion& region, const Point& p, double tol)
{
    for (const Disk& d : region.disks)
        if (distance(region.plane, p, d.center) > d.radius + tol) return false;
    return true;
}

} // namespace kpg
