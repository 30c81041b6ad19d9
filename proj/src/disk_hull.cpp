#include "kpgeom/disk_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kpg {

namespace {

constexpr double kPi = std::numbers::pi;

struct UnitDisk {
    Vec3 c;
    double r;
    um::Frame frame;
};

std::vector<UnitDisk> unit_disks(const Plane& plane, std::span<const Disk> disks)
{
    std::vector<UnitDisk> out;
    out.reserve(disks.size());
    const int kappa = plane.kappa();
    for (const Disk& d : disks) {
        const Vec3 c = to_unit(plane, d.center);
        out.push_back({c, plane.unit_len(d.radius), um::frame_at(kappa, c)});
    }
    return out;
}

double hemisphere_excess(int kappa, const Vec3& h, const std::vector<UnitDisk>& ud)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (const UnitDisk& d : ud) worst = std::max(worst, um::distance(kappa, h, d.c) + d.r);
    return worst - 0.5 * kPi;
}

Vec3 arc_point(int kappa, const um::Frame& f, double radius, double angle)
{
    return f.world(um::polar_point(kappa, angle, radius));
}

} // namespace

std::optional<Point> hemisphere_certificate(const Plane& sphere, std::span<const Disk> disks)
{
    if (sphere.model != Model::spherical) return origin(sphere);
    if (disks.empty()) return origin(sphere);
    const int kappa = 1;
    const auto ud = unit_disks(sphere, disks);

    // Coarse search over candidate poles, then a shrinking pattern search.
    Vec3 best = um::kOrigin;
    double best_val = std::numeric_limits<double>::infinity();
    auto consider = [&](const Vec3& h) {
        const double v = hemisphere_excess(kappa, h, ud);
        if (v < best_val) {
            best_val = v;
            best = h;
        }
    };
    Vec3 mean{};
    for (const UnitDisk& d : ud) mean += d.c;
    if (norm(mean) > 1e-12) consider(mean / norm(mean));
    for (const UnitDisk& d : ud) consider(d.c);
    constexpr int rings = 12;
    for (int i = 0; i <= rings; ++i) {
        const double polar = kPi * i / rings;
        const int around = std::max(1, static_cast<int>(std::round(2 * rings * std::sin(polar))));
        for (int j = 0; j < around; ++j) consider(um::polar_point(kappa, 2 * kPi * j / around, polar));
    }
    for (double step = 0.3; step > 1e-13; step *= 0.5) {
        bool improved = true;
        for (int moves = 0; improved && moves < 40; ++moves) {
            improved = false;
            const um::Frame f = um::frame_at(kappa, best);
            for (int dir = 0; dir < 8; ++dir) {
                const Vec3 h = f.world(um::polar_point(kappa, dir * kPi / 4, step));
                const double v = hemisphere_excess(kappa, h, ud);
                if (v < best_val) {
                    best_val = v;
                    best = h;
                    improved = true;
                }
            }
        }
    }
    if (best_val > sphere.unit_len(sphere.eps)) return std::nullopt;
    return from_unit(sphere, best);
}

void validate_configuration(const Configuration& config)
{
    const Plane& plane = config.plane;
    if (config.disks.empty()) throw GeometryError(ErrorCode::domain, "empty configuration");
    for (const Disk& d : config.disks) {
        validate(plane, d.center);
        if (!(d.radius >= 0.0)) throw GeometryError(ErrorCode::domain, "negative radius");
        if (plane.model == Model::spherical && plane.unit_len(d.radius) >= 0.5 * kPi)
            throw GeometryError(ErrorCode::hemisphere, "spherical disk radius must be below pi/(2k)");
    }
    if (plane.model == Model::spherical && !hemisphere_certificate(plane, config.disks))
        throw GeometryError(ErrorCode::hemisphere, "disks are not contained in a hemisphere");
}

std::vector<std::size_t> maximal_disks(const Plane& plane, std::span<const Disk> disks)
{
    const auto ud = unit_disks(plane, disks);
    const int kappa = plane.kappa();
    const double tol = plane.unit_len(plane.eps);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < ud.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < ud.size() && !covered; ++j) {
            if (i == j) continue;
            const double d = um::distance(kappa, ud[i].c, ud[j].c);
            if (d > ud[j].r - ud[i].r + tol) continue;
            // Mutually nested (equal) disks: keep the lower index.
            const bool mutual = d <= ud[i].r - ud[j].r + tol;
            covered = !mutual || j < i;
        }
        if (!covered) keep.push_back(i);
    }
    return keep;
}

BoundaryChain hull_boundary(const Configuration& config)
{
    validate_configuration(config);
    const Plane& plane = config.plane;
    const int kappa = plane.kappa();
    const double tol = plane.unit_len(plane.eps);
    const auto ud = unit_disks(plane, config.disks);
    const auto keep = maximal_disks(plane, config.disks);

    BoundaryChain chain{plane, {}};
    if (keep.size() == 1) {
        const std::size_t i = keep[0];
        chain.pieces.push_back(Arc{i, config.disks[i], 0.0, 2 * kPi});
        return chain;
    }

    // Reference point inside the hull; the disk reaching farthest from it touches the boundary.
    Vec3 ref = ud[keep[0]].c;
    if (plane.model == Model::spherical) ref = to_unit(plane, *hemisphere_certificate(plane, config.disks));
    std::size_t start = keep[0];
    double reach = -1.0;
    for (std::size_t i : keep) {
        const double v = um::distance(kappa, ref, ud[i].c) + ud[i].r;
        if (v > reach + tol || (v > reach - tol && ud[i].r > ud[start].r + tol)) {
            reach = std::max(reach, v);
            start = i;
        }
    }

    struct Step {
        std::size_t from, to;
        Vec3 line;
        Vec3 foot_from, foot_to;
        double out_angle;
    };
    // Next supporting tangent leaving disk i, rotating counter-clockwise from
    // the boundary direction `in_angle`. A disk may own several hull arcs, so
    // the choice depends on where the boundary currently is, not only on i.
    auto next_step = [&](std::size_t i, double in_angle) {
        Step best{i, i, {}, {}, {}, 0.0};
        double best_violation = -std::numeric_limits<double>::infinity();
        double best_advance = 0.0;
        double best_reach = -1.0;
        for (std::size_t j : keep) {
            if (j == i) continue;
            const auto t = outer_common_tangents(plane, config.disks[i], config.disks[j]);
            const Vec3 w = t[0].line.normal;
            double violation = std::numeric_limits<double>::infinity();
            for (std::size_t m : keep)
                if (m != i && m != j) violation = std::min(violation, um::signed_distance(kappa, w, ud[m].c) - ud[m].r);
            const double out_angle = um::foot_angle(kappa, ud[i].frame, w);
            double advance = wrap_angle(out_angle - in_angle);
            if (advance > 2 * kPi - 1e-9) advance = 0.0;
            const Vec3 f1 = to_unit(plane, t[0].foot1);
            const Vec3 f2 = to_unit(plane, t[0].foot2);
            const double along = um::distance(kappa, f1, f2);
            const bool valid = violation >= -tol;
            const bool best_valid = best_violation >= -tol;
            bool take;
            if (best.to == i || valid != best_valid)
                take = best.to == i || valid;
            else if (!valid)
                take = violation > best_violation;
            else if (std::abs(advance - best_advance) > 1e-9)
                take = advance < best_advance;
            else if (std::abs(along - best_reach) > tol)
                take = along > best_reach;
            else
                take = ud[j].r > ud[best.to].r + tol;
            if (take) {
                best = {i, j, w, f1, f2, out_angle};
                best_violation = violation;
                best_advance = advance;
                best_reach = along;
            }
        }
        return best;
    };

    // Start on the boundary point of the start disk farthest from the reference.
    double in_angle = um::polar_of(kappa, ud[start].frame.local(ref)).angle + kPi;
    if (um::distance(kappa, ref, ud[start].c) <= tol) in_angle = 0.0;

    // Wrap until a tangent repeats; the repeating cycle is the hull boundary.
    std::vector<Step> steps;
    std::size_t cur = start;
    std::size_t cycle_start = 0;
    for (;;) {
        if (steps.size() > 4 * keep.size() + 4) throw GeometryError(ErrorCode::chain_integrity, "hull wrapping did not close");
        const Step s = next_step(cur, in_angle);
        const auto again = std::find_if(steps.begin(), steps.end(),
                                        [&](const Step& o) { return o.from == s.from && o.to == s.to; });
        if (again != steps.end()) {
            cycle_start = static_cast<std::size_t>(again - steps.begin());
            break;
        }
        steps.push_back(s);
        cur = s.to;
        in_angle = um::foot_angle(kappa, ud[cur].frame, s.line);
    }
    steps.erase(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(cycle_start));

    for (std::size_t s = 0; s < steps.size(); ++s) {
        const Step& in = steps[(s + steps.size() - 1) % steps.size()];
        const Step& out = steps[s];
        const std::size_t i = out.from;
        const double a0 = um::foot_angle(kappa, ud[i].frame, in.line);
        double span = wrap_angle(out.out_angle - a0);
        if (span > 2 * kPi - 1e-9) span = 0.0;
        chain.pieces.push_back(Arc{i, config.disks[i], a0, a0 + span});
        chain.pieces.push_back(Segment{from_unit(plane, out.foot_from), from_unit(plane, out.foot_to), Geodesic{out.line}});
    }
    return chain;
}

Point piece_start(const BoundaryChain& chain, const Piece& piece)
{
    if (const auto* s = std::get_if<Segment>(&piece)) return s->start;
    const Arc& a = std::get<Arc>(piece);
    return point_about(chain.plane, a.disk.center, a.start_angle, a.disk.radius);
}

Point piece_end(const BoundaryChain& chain, const Piece& piece)
{
    if (const auto* s = std::get_if<Segment>(&piece)) return s->end;
    const Arc& a = std::get<Arc>(piece);
    return point_about(chain.plane, a.disk.center, a.end_angle, a.disk.radius);
}

void check_chain(const BoundaryChain& chain)
{
    if (chain.pieces.empty()) throw GeometryError(ErrorCode::chain_integrity, "empty chain");
    const double tol = std::max(chain.plane.eps, 1e-9) * 10.0;
    for (std::size_t i = 0; i < chain.pieces.size(); ++i) {
        const Piece& p = chain.pieces[i];
        if (const auto* a = std::get_if<Arc>(&p); a && a->end_angle < a->start_angle - 1e-15)
            throw GeometryError(ErrorCode::chain_integrity, "arc with negative span");
        const Piece& q = chain.pieces[(i + 1) % chain.pieces.size()];
        if (distance(chain.plane, piece_end(chain, p), piece_start(chain, q)) > tol)
            throw GeometryError(ErrorCode::chain_integrity, "consecutive pieces do not meet");
    }
}

double piece_length(const BoundaryChain& chain, const Piece& piece)
{
    if (const auto* s = std::get_if<Segment>(&piece)) return distance(chain.plane, s->start, s->end);
    const Arc& a = std::get<Arc>(piece);
    return sigma(chain.plane, a.disk.radius) * a.span();
}

double hull_perimeter(const BoundaryChain& chain)
{
    check_chain(chain);
    double total = 0.0;
    for (const Piece& p : chain.pieces) total += piece_length(chain, p);
    return total;
}

double two_disk_perimeter(const Plane& plane, const Disk& d1, const Disk& d2)
{
    const int kappa = plane.kappa();
    const double d = distance(plane, d1.center, d2.center);
    if (d <= std::abs(d1.radius - d2.radius) + plane.eps)
        return circle_perimeter(plane, std::max(d1.radius, d2.radius));
    const double ud = plane.unit_len(d);
    const double r1 = plane.unit_len(d1.radius);
    const double r2 = plane.unit_len(d2.radius);
    // Angle at p_i between the tangent foot q_i and the other center.
    auto angle = [&](double ra, double rb) {
        const double a = (sn(kappa, rb) - sn(kappa, ra) * cs(kappa, ud)) / sn(kappa, ud);
        return std::acos(std::clamp(-a / cs(kappa, ra), -1.0, 1.0));
    };
    const auto t = outer_common_tangents(plane, d1, d2);
    const double q1q2 = distance(plane, t[0].foot1, t[0].foot2);
    return 2.0 * ((kPi - angle(r1, r2)) * sigma(plane, d1.radius) + q1q2 +
                  (kPi - angle(r2, r1)) * sigma(plane, d2.radius));
}

SupportContact support_contact(const BoundaryChain& chain, const Point& p)
{
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    const Vec3 u = to_unit(plane, p);
    SupportContact best{std::numeric_limits<double>::infinity(), {}};
    for (const Piece& piece : chain.pieces) {
        const auto* a = std::get_if<Arc>(&piece);
        if (!a) continue;
        const um::Frame f = um::frame_at(kappa, to_unit(plane, a->disk.center));
        const Vec3 local = f.local(u);
        const double phi = std::atan2(local.y, local.x);
        // The tangent closest in angle to the direction of p gives the smallest distance.
        double theta = a->start_angle + wrap_angle(phi - a->start_angle);
        if (theta > a->end_angle) {
            const double past_end = theta - a->end_angle;
            const double before_start = a->start_angle + 2 * kPi - theta;
            theta = past_end < before_start ? a->end_angle : a->start_angle;
        }
        const Vec3 wl = um::tangent_covector_local(kappa, plane.unit_len(a->disk.radius), theta);
        const double s = um::signed_distance(kappa, wl, local);
        if (s < best.margin) best = {s, Geodesic{f.world_covector(wl)}};
    }
    best.margin = plane.len(best.margin);
    return best;
}

double support_margin(const BoundaryChain& chain, const Point& p)
{
    return support_contact(chain, p).margin;
}

bool hull_contains(const BoundaryChain& chain, const Point& p)
{
    return support_margin(chain, p) >= -chain.plane.eps;
}

double chain_area(const BoundaryChain& chain)
{
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    std::vector<Vec3> verts;
    double caps = 0.0;
    for (const Piece& piece : chain.pieces) {
        const auto* a = std::get_if<Arc>(&piece);
        if (!a) continue;
        const Vec3 c = to_unit(plane, a->disk.center);
        const um::Frame f = um::frame_at(kappa, c);
        const double r = plane.unit_len(a->disk.radius);
        const Vec3 s = arc_point(kappa, f, r, a->start_angle);
        const Vec3 e = arc_point(kappa, f, r, a->end_angle);
        verts.push_back(s);
        verts.push_back(e);
        const double sector = a->span() * um::disk_area(kappa, r) / (2 * kPi);
        if (a->span() >= 2 * kPi - 1e-12)
            caps += sector;
        else
            caps += sector - um::triangle_area(kappa, c, s, e);
    }
    double poly = 0.0;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i) poly += um::triangle_area(kappa, verts[0], verts[i], verts[i + 1]);
    const double s = plane.scale();
    return (poly + caps) / (s * s);
}

double gauss_bonnet_residual(const BoundaryChain& chain)
{
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    double turning = 0.0;
    for (const Piece& piece : chain.pieces)
        if (const auto* a = std::get_if<Arc>(&piece)) turning += cs(kappa, plane.unit_len(a->disk.radius)) * a->span();
    const double s = plane.scale();
    return turning + kappa * chain_area(chain) * s * s - 2 * kPi;
}

std::vector<Point> sample_boundary(const BoundaryChain& chain, int per_piece)
{
    std::vector<Point> out;
    for (const Piece& piece : chain.pieces) {
        for (int i = 0; i <= per_piece; ++i) {
            const double t = static_cast<double>(i) / (per_piece + 1);
            if (const auto* a = std::get_if<Arc>(&piece))
                out.push_back(point_about(chain.plane, a->disk.center, a->start_angle + t * a->span(), a->disk.radius));
            else {
                const Segment& s = std::get<Segment>(piece);
                const int kappa = chain.plane.kappa();
                out.push_back(from_unit(chain.plane, um::interpolate(kappa, to_unit(chain.plane, s.start),
                                                                     to_unit(chain.plane, s.end), t)));
            }
        }
    }
    return out;
}

} // namespace kpg
