#include "kpgeom/cocentral_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <utility>

#include "kpgeom/monte_carlo.hpp"

namespace kpg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kContactTol = 1e-9;
constexpr double kMergeTol = 1e-7;

struct UArc {
    Vec3 c;
    double r;
    um::Frame frame;
    double start;
    double span;
};

struct URegion {
    int kappa;
    std::vector<Vec3> q;
    std::vector<UArc> arcs;
    Vec3 inside;
};

URegion unit_region(const IntersectionRegion& region)
{
    const Plane& plane = region.plane;
    URegion u{plane.kappa(), {}, {}, {}};
    for (const Point& p : region.vertices) u.q.push_back(to_unit(plane, p));
    Vec3 sum{};
    for (const Piece& piece : region.chain.pieces) {
        const Arc& a = std::get<Arc>(piece);
        const Vec3 c = to_unit(plane, a.disk.center);
        u.arcs.push_back({c, plane.unit_len(a.disk.radius), um::frame_at(u.kappa, c), a.start_angle, a.span()});
        sum += u.arcs.back().frame.world(um::polar_point(u.kappa, a.start_angle + 0.5 * a.span(), u.arcs.back().r));
    }
    for (const Vec3& q : u.q) sum += q;
    u.inside = um::normalize_point(u.kappa, sum);
    return u;
}

struct UFar {
    double radius = 0.0;
    std::vector<std::size_t> contacts;
    bool along = false;
    bool arc_point = false;
    Vec3 far{};
};

UFar farthest(const URegion& u, const Vec3& c)
{
    UFar out;
    out.radius = -1.0;
    std::vector<double> dq(u.q.size());
    for (std::size_t j = 0; j < u.q.size(); ++j) {
        dq[j] = um::distance(u.kappa, c, u.q[j]);
        out.radius = std::max(out.radius, dq[j]);
    }
    const double vmax = out.radius;
    // Arc points beat the vertices only at an arc center or when the farthest
    // point of the arc's circle lies strictly inside the arc.
    double arc_best = -1.0;
    bool arc_along = false;
    Vec3 arc_far{};
    for (const UArc& a : u.arcs) {
        const Vec3 l = a.frame.local(c);
        const um::Polar pol = um::polar_of(u.kappa, l);
        if (pol.dist < 1e-12) {
            if (a.r > arc_best) {
                arc_best = a.r;
                arc_along = true;
                arc_far = a.frame.world(um::polar_point(u.kappa, a.start, a.r));
            }
            continue;
        }
        const double rel = wrap_angle(pol.angle + kPi - a.start);
        const bool inside = a.span >= kTwoPi - 1e-12 || (rel > 1e-9 && rel < a.span - 1e-9);
        if (!inside) continue;
        const double v = pol.dist + a.r;
        if (v > arc_best) {
            arc_best = v;
            arc_along = false;
            arc_far = a.frame.world(um::polar_point(u.kappa, pol.angle + kPi, a.r));
        }
    }
    if (arc_best > out.radius - kContactTol && arc_best >= 0.0) {
        out.along = arc_along;
        out.arc_point = !arc_along;
        out.far = arc_far;
    }
    out.radius = std::max(out.radius, arc_best);
    for (std::size_t j = 0; j < u.q.size(); ++j)
        if (dq[j] >= out.radius - kContactTol) out.contacts.push_back(j);
    // A vertex contact adjacent to an interior arc point is the same contact;
    // the slide direction still goes to the exact maximizer.
    const bool arc_max = out.arc_point && arc_best > vmax;
    if (out.arc_point && !out.contacts.empty()) out.arc_point = false;
    if (!out.arc_point && !out.along && out.contacts.size() == 1) out.far = arc_max ? arc_far : u.q[out.contacts[0]];
    return out;
}

Vec3 bisector_covector(int kappa, const Vec3& a, const Vec3& b)
{
    if (kappa == 0) return {b.x - a.x, b.y - a.y, 0.5 * (a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y)};
    return {a.x - b.x, a.y - b.y, kappa * (a.z - b.z)};
}

std::optional<Vec3> circumcenter(int kappa, const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& near)
{
    Vec3 u = cross(bisector_covector(kappa, a, b), bisector_covector(kappa, a, c));
    const double scale = norm(u);
    if (scale < 1e-300) return std::nullopt;
    u = u / scale;
    if (kappa == 0) {
        if (std::abs(u.z) < 1e-14) return std::nullopt;
    } else if (kappa < 0) {
        if (form(-1, u, u) >= -1e-14) return std::nullopt;
    } else if (dot(u, near) < 0.0) {
        u = -u;
    }
    return um::normalize_point(kappa, u);
}

bool contains_all(const std::vector<std::size_t>& set, std::initializer_list<std::size_t> items)
{
    for (std::size_t i : items)
        if (!std::binary_search(set.begin(), set.end(), i)) return false;
    return true;
}

struct Candidate {
    Vec3 u;
    double radius;
    std::vector<std::size_t> contacts;
};

void merge_candidate(int kappa, std::vector<Candidate>& cands, Candidate c)
{
    for (Candidate& o : cands)
        if (um::distance(kappa, o.u, c.u) <= kMergeTol) {
            std::vector<std::size_t> merged;
            std::set_union(o.contacts.begin(), o.contacts.end(), c.contacts.begin(), c.contacts.end(),
                           std::back_inserter(merged));
            o.contacts = std::move(merged);
            return;
        }
    cands.push_back(std::move(c));
}

// Connects, for every pair of generators, the consecutive candidates sharing
// both; `dist` orders candidates along the common bisector.
template <class Dist>
std::vector<TreeEdge> bisector_edges(const std::vector<std::vector<std::size_t>>& contacts, std::size_t generators,
                                     Dist&& dist)
{
    std::vector<TreeEdge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t a = 0; a < generators; ++a)
        for (std::size_t b = a + 1; b < generators; ++b) {
            std::vector<std::size_t> on;
            for (std::size_t v = 0; v < contacts.size(); ++v)
                if (contains_all(contacts[v], {a, b})) on.push_back(v);
            if (on.size() < 2) continue;
            std::size_t extreme = on[0];
            double far = -1.0;
            for (std::size_t v : on)
                if (dist(on[0], v) > far) {
                    far = dist(on[0], v);
                    extreme = v;
                }
            std::sort(on.begin(), on.end(),
                      [&](std::size_t x, std::size_t y) { return dist(extreme, x) < dist(extreme, y); });
            for (std::size_t i = 0; i + 1 < on.size(); ++i) {
                const auto key = std::minmax(on[i], on[i + 1]);
                if (!seen.insert(key).second) continue;
                edges.push_back({on[i], on[i + 1], {a, b}});
            }
        }
    return edges;
}

void require_interior(const IntersectionRegion& region)
{
    if (region.empty_flag || region.chain.pieces.empty())
        throw GeometryError(ErrorCode::domain, "intersection has empty interior");
}

// ---------------------------------------------------------------------------
// Euclidean central set of a union of disks, used as the dual side.

struct Disk2 {
    double x, y, r;
};

struct Central2 {
    std::vector<std::array<double, 3>> vertices;  // x, y, radius
    std::vector<TreeEdge> edges;
};

using Intervals = std::vector<std::pair<double, double>>;

// Angles of the circle of `a` lying strictly inside `b`, as a subset of [0, 2 pi).
Intervals inside_angles(const Disk2& a, const Disk2& b)
{
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double D = std::hypot(dx, dy);
    if (D < 1e-15) return a.r < b.r ? Intervals{{0.0, kTwoPi}} : Intervals{};
    const double c = (a.r * a.r + D * D - b.r * b.r) / (2.0 * a.r * D);
    if (c <= -1.0) return {{0.0, kTwoPi}};
    if (c >= 1.0) return {};
    const double half = std::acos(c);
    const double lo = wrap_angle(std::atan2(dy, dx) - half);
    const double hi = lo + 2.0 * half;
    if (hi <= kTwoPi) return {{lo, hi}};
    return {{0.0, hi - kTwoPi}, {lo, kTwoPi}};
}

// Total measure of [0, 2 pi) not covered by the intervals.
double uncovered(Intervals iv)
{
    std::sort(iv.begin(), iv.end());
    double reach = 0.0, gap = 0.0;
    for (const auto& [lo, hi] : iv) {
        if (lo > reach) gap += lo - reach;
        reach = std::max(reach, hi);
    }
    return gap + std::max(0.0, kTwoPi - reach);
}

Central2 union_central_set(const std::vector<Disk2>& disks)
{
    double scale = 0.0;
    for (const Disk2& d : disks) scale = std::max(scale, d.r + std::hypot(d.x, d.y));
    const double tol = 1e-9 * scale;
    const std::size_t n = disks.size();

    std::vector<std::array<double, 2>> corners;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Disk2& a = disks[i];
            const Disk2& b = disks[j];
            const double D = std::hypot(b.x - a.x, b.y - a.y);
            if (D >= a.r + b.r || D <= std::abs(a.r - b.r)) continue;
            const double along = (a.r * a.r - b.r * b.r + D * D) / (2.0 * D);
            const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
            const double ex = (b.x - a.x) / D, ey = (b.y - a.y) / D;
            for (double s : {-1.0, 1.0}) {
                const std::array<double, 2> p{a.x + along * ex - s * h * ey, a.y + along * ey + s * h * ex};
                bool exposed = true;
                for (std::size_t k = 0; k < n && exposed; ++k)
                    if (k != i && k != j && std::hypot(p[0] - disks[k].x, p[1] - disks[k].y) < disks[k].r - tol)
                        exposed = false;
                if (!exposed) continue;
                bool dup = false;
                for (const auto& c : corners) dup |= std::hypot(c[0] - p[0], c[1] - p[1]) <= 1e3 * tol;
                if (!dup) corners.push_back(p);
            }
        }

    auto contacts_of = [&](double x, double y, double r) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < corners.size(); ++k)
            if (std::abs(std::hypot(corners[k][0] - x, corners[k][1] - y) - r) <= 1e3 * tol) out.push_back(k);
        return out;
    };
    auto inside_union = [&](double x, double y, double r) {
        const Disk2 probe{x, y, r};
        Intervals iv;
        for (const Disk2& d : disks)
            for (const auto& p : inside_angles(probe, d)) iv.push_back(p);
        return uncovered(iv) == 0.0;
    };

    Central2 out;
    std::vector<std::vector<std::size_t>> cont;
    auto add = [&](double x, double y, double r, std::vector<std::size_t> c) {
        for (std::size_t v = 0; v < out.vertices.size(); ++v)
            if (std::hypot(out.vertices[v][0] - x, out.vertices[v][1] - y) <= kMergeTol * scale) {
                std::vector<std::size_t> merged;
                std::set_union(cont[v].begin(), cont[v].end(), c.begin(), c.end(), std::back_inserter(merged));
                cont[v] = std::move(merged);
                return;
            }
        out.vertices.push_back({x, y, r});
        cont.push_back(std::move(c));
    };

    // Disks with an exposed boundary arc are maximal.
    for (std::size_t i = 0; i < n; ++i) {
        Intervals iv;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const bool same = std::hypot(disks[i].x - disks[j].x, disks[i].y - disks[j].y) <= tol &&
                              std::abs(disks[i].r - disks[j].r) <= tol;
            if (same && j > i) continue;
            for (const auto& p : inside_angles(disks[i], disks[j])) iv.push_back(p);
        }
        if (uncovered(iv) * disks[i].r > 1e-12 * scale) add(disks[i].x, disks[i].y, disks[i].r, contacts_of(disks[i].x, disks[i].y, disks[i].r));
    }
    // Disks through three corners that fit inside the union.
    const std::size_t m = corners.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                const auto& A = corners[a];
                const auto& B = corners[b];
                const auto& C = corners[c];
                const double d = 2.0 * (A[0] * (B[1] - C[1]) + B[0] * (C[1] - A[1]) + C[0] * (A[1] - B[1]));
                if (std::abs(d) < 1e-14 * scale * scale) continue;
                const double a2 = A[0] * A[0] + A[1] * A[1], b2 = B[0] * B[0] + B[1] * B[1],
                             c2 = C[0] * C[0] + C[1] * C[1];
                const double x = (a2 * (B[1] - C[1]) + b2 * (C[1] - A[1]) + c2 * (A[1] - B[1])) / d;
                const double y = (a2 * (C[0] - B[0]) + b2 * (A[0] - C[0]) + c2 * (B[0] - A[0])) / d;
                const double r = std::hypot(A[0] - x, A[1] - y);
                bool closer = false;
                for (const auto& k : corners) closer |= std::hypot(k[0] - x, k[1] - y) < r - 1e3 * tol;
                if (closer || !inside_union(x, y, r * (1.0 - 1e-7))) continue;
                add(x, y, r, contacts_of(x, y, r));
            }

    out.edges = bisector_edges(cont, m, [&](std::size_t u, std::size_t v) {
        return std::hypot(out.vertices[u][0] - out.vertices[v][0], out.vertices[u][1] - out.vertices[v][1]);
    });
    return out;
}

// Conformal chart centered at w (Poincare disk, scaled affine plane, or
// stereographic projection from -w), followed by inversion in the unit circle.
struct DualChart {
    int kappa;
    um::Frame frame;

    double tn(double t) const
    {
        return kappa < 0 ? std::tanh(t) : (kappa > 0 ? std::tan(t) : t);
    }
    // Euclidean image of the unit-model disk (c, R), not yet inverted.
    Disk2 chart_disk(const Vec3& c, double R) const
    {
        const um::Polar pol = um::polar_of(kappa, frame.local(c));
        const double lo = tn(0.5 * (pol.dist - R)), hi = tn(0.5 * (pol.dist + R));
        const double mid = 0.5 * (lo + hi);
        return {mid * std::cos(pol.angle), mid * std::sin(pol.angle), 0.5 * (hi - lo)};
    }
    // psi(iota(B)) for a disk B containing the chart center.
    Disk2 dual_disk(const Vec3& c, double R) const
    {
        const Disk2 d = chart_disk(c, R);
        const double s = d.r * d.r - d.x * d.x - d.y * d.y;
        return {-d.x / s, -d.y / s, d.r / s};
    }
};

} // namespace

Spindle spindle(const Plane& plane, const Point& p, const Point& q, double rho)
{
    validate(plane, p);
    validate(plane, q);
    if (!(rho >= 0.0)) throw GeometryError(ErrorCode::domain, "negative spindle radius");
    const int kappa = plane.kappa();
    const double R = plane.unit_len(rho);
    if (kappa > 0 && R >= 0.5 * kPi) throw GeometryError(ErrorCode::hemisphere, "spindle radius must be below pi/(2k)");
    const Vec3 a = to_unit(plane, p), b = to_unit(plane, q);
    const double d = um::distance(kappa, a, b);
    if (d > 2.0 * R + plane.unit_len(plane.eps))
        throw GeometryError(ErrorCode::spindle_undefined, "points farther apart than the spindle diameter");
    double h;
    if (kappa == 0) h = std::sqrt(std::max(0.0, R * R - 0.25 * d * d));
    else if (kappa < 0) h = std::acosh(std::max(1.0, std::cosh(R) / std::cosh(0.5 * d)));
    else h = std::acos(std::min(1.0, std::cos(R) / std::cos(0.5 * d)));
    const Vec3 m = um::interpolate(kappa, a, b, 0.5);
    const um::Frame f = um::frame_at(kappa, m);
    const double phi = d > 0.0 ? um::polar_of(kappa, f.local(b)).angle : 0.0;
    Spindle s;
    s.p = p;
    s.q = q;
    s.rho = rho;
    s.d1 = {from_unit(plane, f.world(um::polar_point(kappa, phi + 0.5 * kPi, h))), rho};
    s.d2 = {from_unit(plane, f.world(um::polar_point(kappa, phi - 0.5 * kPi, h))), rho};
    if (d <= plane.unit_len(plane.eps)) {
        // The two disks only touch: the spindle is the point itself.
        s.region.plane = plane;
        s.region.disks = {s.d1, s.d2};
        s.region.chain.plane = plane;
        s.region.vertices = {p};
        return s;
    }
    s.region = intersect_disks({plane, {s.d1, s.d2}});
    return s;
}

bool spindle_contains(const Spindle& s, const Point& x, double tol)
{
    return region_contains(s.region, x, tol);
}

CoveringDisk covering_disk_at(const IntersectionRegion& region, const Point& center)
{
    require_interior(region);
    const Plane& plane = region.plane;
    const UFar f = farthest(unit_region(region), to_unit(plane, center));
    CoveringDisk out;
    out.disk = {center, plane.len(f.radius)};
    out.contacts = f.contacts;
    out.along_arc = f.along;
    out.arc_point = f.arc_point;
    out.far_point = from_unit(plane, f.far);
    return out;
}

GeodesicTree cocentral_tree(const IntersectionRegion& region)
{
    require_interior(region);
    const Plane& plane = region.plane;
    GeodesicTree tree;
    tree.plane = plane;
    if (region.full_disk_flag) {
        const Disk& d = region.disks[region.full_index];
        tree.vertices.push_back({d.center, d.radius, {}});
        return tree;
    }
    const URegion u = unit_region(region);
    const int kappa = u.kappa;
    std::vector<Candidate> cands;
    for (const UArc& a : u.arcs) {
        std::vector<std::size_t> contacts;
        for (std::size_t j = 0; j < u.q.size(); ++j)
            if (std::abs(um::distance(kappa, a.c, u.q[j]) - a.r) <= kContactTol) contacts.push_back(j);
        merge_candidate(kappa, cands, {a.c, a.r, contacts});
    }
    const std::size_t m = u.q.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                const auto x = circumcenter(kappa, u.q[a], u.q[b], u.q[c], u.inside);
                if (!x) continue;
                const UFar f = farthest(u, *x);
                if (f.along || f.arc_point || !contains_all(f.contacts, {a, b, c})) continue;
                merge_candidate(kappa, cands, {*x, f.radius, f.contacts});
            }

    std::vector<std::vector<std::size_t>> contacts;
    for (const Candidate& c : cands) {
        tree.vertices.push_back({from_unit(plane, c.u), plane.len(c.radius), c.contacts});
        contacts.push_back(c.contacts);
    }
    tree.edges = bisector_edges(contacts, m, [&](std::size_t x, std::size_t y) {
        return um::distance(kappa, cands[x].u, cands[y].u);
    });
    return tree;
}

CenterSegment min_covering_disk_on_bisector(const IntersectionRegion& region, std::size_t i, std::size_t j)
{
    const GeodesicTree tree = cocentral_tree(region);
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < tree.vertices.size(); ++v)
        if (contains_all(tree.vertices[v].contacts, {std::min(i, j), std::max(i, j)})) on.push_back(v);
    CenterSegment seg;
    if (on.empty()) return seg;
    seg.empty = false;
    seg.a = seg.b = tree.vertices[on[0]].point;
    double best = 0.0;
    for (std::size_t x : on)
        for (std::size_t y : on) {
            const double d = distance(region.plane, tree.vertices[x].point, tree.vertices[y].point);
            if (d > best) {
                best = d;
                seg.a = tree.vertices[x].point;
                seg.b = tree.vertices[y].point;
            }
        }
    return seg;
}

DualityReport duality_check(const IntersectionRegion& region, double tol)
{
    require_interior(region);
    const Plane& plane = region.plane;
    const int kappa = plane.kappa();
    const Witness w = is_nonempty({plane, region.disks});
    if (-w.value < 1e-6) throw GeometryError(ErrorCode::pole_proximity, "no interior point deep enough for the pole");
    const DualChart chart{kappa, um::frame_at(kappa, to_unit(plane, w.point))};

    std::vector<Disk2> dual;
    for (const Disk& d : region.disks) dual.push_back(chart.dual_disk(to_unit(plane, d.center), plane.unit_len(d.radius)));
    const Central2 c2 = union_central_set(dual);
    const GeodesicTree tree = cocentral_tree(region);

    DualityReport rep;
    rep.vertices = tree.vertices.size();
    rep.edges = tree.edges.size();
    rep.dual_vertices = c2.vertices.size();
    rep.dual_edges = c2.edges.size();

    std::vector<std::size_t> partner(tree.vertices.size(), c2.vertices.size());
    std::vector<char> used(c2.vertices.size(), 0);
    bool bijective = rep.vertices == rep.dual_vertices;
    for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
        const Disk2 img = chart.dual_disk(to_unit(plane, tree.vertices[v].point), plane.unit_len(tree.vertices[v].radius));
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < c2.vertices.size(); ++k) {
            const double e = std::hypot(c2.vertices[k][0] - img.x, c2.vertices[k][1] - img.y) /
                             (1.0 + std::hypot(img.x, img.y));
            if (e < best) {
                best = e;
                partner[v] = k;
            }
        }
        rep.max_vertex_error = std::max(rep.max_vertex_error, best);
        if (partner[v] < used.size()) {
            if (used[partner[v]]) bijective = false;
            used[partner[v]] = 1;
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> mapped, expected;
    for (const TreeEdge& e : tree.edges) mapped.insert(std::minmax(partner[e.a], partner[e.b]));
    for (const TreeEdge& e : c2.edges) expected.insert(std::minmax(e.a, e.b));
    rep.edges_match = bijective && mapped == expected && rep.edges == rep.dual_edges;
    rep.pass = bijective && rep.edges_match && rep.max_vertex_error <= tol;
    return rep;
}

Configuration cocentral_sharpen(const Configuration& config)
{
    const IntersectionRegion region = intersect_disks(config);
    require_interior(region);
    const Plane& plane = config.plane;
    const int kappa = plane.kappa();
    const URegion u = unit_region(region);
    const double tol = plane.unit_len(plane.eps);

    std::vector<Disk> out;
    for (const Disk& d : config.disks) {
        const Vec3 c = to_unit(plane, d.center);
        UFar f = farthest(u, c);
        if (f.along && std::abs(f.radius - plane.unit_len(d.radius)) <= tol) {
            out.push_back(d);
            continue;
        }
        Vec3 center = c;
        if (!(f.along || f.contacts.size() + (f.arc_point ? 1 : 0) >= 2)) {
            // Slide towards the single farthest point; the radius shrinks by the
            // distance travelled until a second contact appears.
            const double f0 = f.radius;
            const Vec3 x = f.far;
            const double len = um::distance(kappa, c, x);
            auto excess = [&](double t) {
                return farthest(u, um::interpolate(kappa, c, x, t / len)).radius - (f0 - t);
            };
            double lo = 0.0, hi = len;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + len); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (excess(mid) <= 1e-13) lo = mid;
                else hi = mid;
            }
            center = um::interpolate(kappa, c, x, lo / len);
            f = farthest(u, center);
        }
        out.push_back({from_unit(plane, center), plane.len(f.radius)});
    }
    const GeodesicTree tree = cocentral_tree(region);
    for (const TreeVertex& v : tree.vertices) out.push_back({v.point, v.radius});

    std::vector<Disk> unique;
    for (const Disk& d : out) {
        bool dup = false;
        for (const Disk& e : unique)
            dup |= distance(plane, d.center, e.center) <= plane.eps && std::abs(d.radius - e.radius) <= plane.eps;
        if (!dup) unique.push_back(d);
    }
    return {plane, unique};
}

CocentralDecompositionReport cocentral_decomposition_check(const Configuration& sharpened, std::size_t samples,
                                                           std::uint64_t seed)
{
    const Plane& plane = sharpened.plane;
    const auto& disks = sharpened.disks;
    const double tol = 1e-7;
    const IntersectionRegion region = intersect_disks(sharpened);
    const SystemTree st = subdivide_by_centers(cocentral_tree(region), disks, tol);

    CocentralDecompositionReport rep;
    if (st.nodes.size() == 1) {
        rep.pass = true;
        return rep;
    }
    const auto [leaf, nb] = st.leaf();
    rep.leaf = leaf;
    rep.neighbor = nb;

    std::vector<Disk> rest;
    for (std::size_t i = 0; i < disks.size(); ++i)
        if (distance(plane, disks[i].center, disks[leaf].center) > tol) rest.push_back(disks[i]);
    const double a_u = region_area(region);
    const double a_rest = region_area(intersect_disks({plane, rest}));
    const double a_lens = region_area(intersect_disks({plane, {disks[nb], disks[leaf]}}));
    const double a_nb = circle_area(plane, disks[nb].radius);
    rep.area_residual = a_u - a_rest + a_nb - a_lens;

    CounterRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Point x = sample_in_disk(plane, disks[nb], rng);
        if (distance(plane, x, disks[leaf].center) <= disks[leaf].radius + tol) continue;
        ++rep.samples;
        for (const Disk& d : rest)
            if (distance(plane, x, d.center) > d.radius + tol) {
                ++rep.containment_mismatch;
                break;
            }
    }
    rep.pass = rep.containment_mismatch == 0 && std::abs(rep.area_residual) <= 1e-6 * (1.0 + a_rest);
    return rep;
}

} // namespace kpg
