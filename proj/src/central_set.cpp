#include "kpgeom/central_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "kpgeom/monte_carlo.hpp"

namespace kpg {

namespace {

constexpr double kPi = std::numbers::pi;
// Contact and merge tolerance in unit-model lengths.
constexpr double kContactTol = 1e-7;

struct UnitPiece {
    bool arc = false;
    // Arc data.
    Vec3 center;
    um::Frame frame;
    double radius = 0.0;
    double start = 0.0;
    double span = 0.0;
    // Segment data.
    Vec3 line;
    Vec3 a, b;
    double length = 0.0;
};

std::vector<UnitPiece> unit_pieces(const BoundaryChain& chain)
{
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    std::vector<UnitPiece> out;
    for (const Piece& piece : chain.pieces) {
        UnitPiece u;
        if (const auto* a = std::get_if<Arc>(&piece)) {
            u.arc = true;
            u.center = to_unit(plane, a->disk.center);
            u.frame = um::frame_at(kappa, u.center);
            u.radius = plane.unit_len(a->disk.radius);
            u.start = a->start_angle;
            u.span = a->span();
        } else {
            const Segment& s = std::get<Segment>(piece);
            u.line = s.line.normal;
            u.a = to_unit(plane, s.start);
            u.b = to_unit(plane, s.end);
            u.length = um::distance(kappa, u.a, u.b);
        }
        out.push_back(u);
    }
    return out;
}

// Inscribed radius (unit model) from precomputed pieces: the smallest distance
// to a supporting geodesic of an arc.
double unit_margin(int kappa, const std::vector<UnitPiece>& pieces, const Vec3& x)
{
    double best = std::numeric_limits<double>::infinity();
    for (const UnitPiece& p : pieces) {
        if (!p.arc) continue;
        const Vec3 local = p.frame.local(x);
        const double phi = std::atan2(local.y, local.x);
        double theta = p.start + wrap_angle(phi - p.start);
        if (theta > p.start + p.span) {
            const double past_end = theta - p.start - p.span;
            const double before_start = p.start + 2 * kPi - theta;
            theta = past_end < before_start ? p.start + p.span : p.start;
        }
        best = std::min(best, um::signed_distance(kappa, um::tangent_covector_local(kappa, p.radius, theta), local));
    }
    return best;
}

bool within_segment(int kappa, const UnitPiece& s, const Vec3& foot, double tol)
{
    return um::distance(kappa, s.a, foot) + um::distance(kappa, foot, s.b) <= s.length + tol;
}

std::vector<std::size_t> contacts_of(int kappa, const std::vector<UnitPiece>& pieces, const Vec3& x, double rho)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const UnitPiece& p = pieces[i];
        if (p.arc) {
            const double d = um::distance(kappa, x, p.center);
            if (std::abs(d + rho - p.radius) > kContactTol) continue;
            if (d <= kContactTol) {
                if (p.span > 1e-12 || p.radius == 0.0) out.push_back(i);
                continue;
            }
            const Vec3 local = p.frame.local(x);
            const double dir = std::atan2(local.y, local.x) + kPi;
            const double off = wrap_angle(dir - p.start);
            if (off <= p.span + 1e-9 || off >= 2 * kPi - 1e-9) out.push_back(i);
        } else {
            if (std::abs(um::signed_distance(kappa, p.line, x) - rho) > kContactTol) continue;
            if (within_segment(kappa, p, um::project(kappa, p.line, x), 1e-9)) out.push_back(i);
        }
    }
    return out;
}

// Incenter of three geodesics: the point at equal positive signed distance.
std::optional<Vec3> incenter(int kappa, const Vec3& wa, const Vec3& wb, const Vec3& wc)
{
    Vec3 u = cross(wa - wb, wa - wc);
    if (norm(u) < 1e-14) return std::nullopt;
    if (kappa == 0) {
        if (std::abs(u.z) < 1e-12 * norm(u)) return std::nullopt;
        u = u / u.z;
    } else if (kappa > 0) {
        u = u / norm(u);
        if (dot(wa, u) < 0.0) u = -u;
    } else {
        const double q = -form(-1, u, u);
        if (q <= 1e-14 * dot(u, u)) return std::nullopt;
        u = um::normalize_point(-1, u);
    }
    if (dot(wa, u) <= 0.0) return std::nullopt;
    return u;
}

Vec3 normal_ray(int kappa, const Vec3& base, const Vec3& w, double s)
{
    const Vec3 n{w.x, w.y, kappa * w.z};
    return um::normalize_point(kappa, base * cs(kappa, s) + n * sn(kappa, s));
}

} // namespace

double inscribed_radius(const BoundaryChain& chain, const Point& p)
{
    const double m = support_margin(chain, p);
    if (m < -chain.plane.eps) throw GeometryError(ErrorCode::domain, "point outside the hull");
    return std::max(0.0, m);
}

GeodesicTree central_tree(const BoundaryChain& chain)
{
    check_chain(chain);
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    GeodesicTree tree{plane, {}, {}};
    if (chain.pieces.size() == 1) {
        const Arc& a = std::get<Arc>(chain.pieces[0]);
        tree.vertices.push_back({a.disk.center, a.disk.radius, {0}});
        return tree;
    }
    const auto pieces = unit_pieces(chain);
    std::vector<std::size_t> segs;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!pieces[i].arc) segs.push_back(i);

    struct Candidate {
        Vec3 x;
        double rho;
        std::vector<std::size_t> contacts;
    };
    std::vector<Candidate> cands;
    auto add = [&](const Vec3& x, double rho, std::vector<std::size_t> contacts) {
        for (Candidate& c : cands) {
            if (um::distance(kappa, c.x, x) <= kContactTol) {
                for (std::size_t k : contacts)
                    if (std::find(c.contacts.begin(), c.contacts.end(), k) == c.contacts.end()) c.contacts.push_back(k);
                std::sort(c.contacts.begin(), c.contacts.end());
                return;
            }
        }
        std::sort(contacts.begin(), contacts.end());
        cands.push_back({x, rho, std::move(contacts)});
    };

    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const UnitPiece& p = pieces[i];
        if (!p.arc || (p.span <= 1e-12 && p.radius > 0.0)) continue;
        add(p.center, p.radius, contacts_of(kappa, pieces, p.center, p.radius));
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            for (std::size_t k = j + 1; k < segs.size(); ++k) {
                const auto x = incenter(kappa, pieces[segs[i]].line, pieces[segs[j]].line, pieces[segs[k]].line);
                if (!x) continue;
                const double rho = um::signed_distance(kappa, pieces[segs[i]].line, *x);
                if (std::abs(unit_margin(kappa, pieces, *x) - rho) > kContactTol) continue;
                auto contacts = contacts_of(kappa, pieces, *x, rho);
                std::size_t weight = 0;
                for (std::size_t c : contacts) weight += pieces[c].arc ? 2 : 1;
                if (weight >= 3) add(*x, rho, std::move(contacts));
            }

    for (const Candidate& c : cands)
        tree.vertices.push_back({from_unit(plane, c.x), plane.len(std::max(0.0, c.rho)), c.contacts});

    auto has = [&](std::size_t v, std::size_t piece) {
        const auto& cs = cands[v].contacts;
        return std::binary_search(cs.begin(), cs.end(), piece);
    };
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            std::vector<std::size_t> on;
            for (std::size_t v = 0; v < cands.size(); ++v)
                if (has(v, segs[i]) && has(v, segs[j])) on.push_back(v);
            if (on.size() < 2) continue;
            // Order along the bisector, starting from one extreme vertex.
            std::size_t e0 = on[0], e1 = on[1];
            double far = -1.0;
            for (std::size_t a : on)
                for (std::size_t b : on) {
                    const double d = um::distance(kappa, cands[a].x, cands[b].x);
                    if (d > far) {
                        far = d;
                        e0 = a;
                        e1 = b;
                    }
                }
            (void)e1;
            std::sort(on.begin(), on.end(), [&](std::size_t a, std::size_t b) {
                return um::distance(kappa, cands[e0].x, cands[a].x) < um::distance(kappa, cands[e0].x, cands[b].x);
            });
            for (std::size_t t = 0; t + 1 < on.size(); ++t) {
                const std::size_t a = std::min(on[t], on[t + 1]);
                const std::size_t b = std::max(on[t], on[t + 1]);
                const bool dup = std::any_of(tree.edges.begin(), tree.edges.end(),
                                             [&](const TreeEdge& e) { return e.a == a && e.b == b; });
                if (!dup) tree.edges.push_back({a, b, {segs[i], segs[j]}});
            }
        }
    return tree;
}

double central_radius_on_edge(const BoundaryChain& chain, const TreeEdge& edge, const Point& p)
{
    const auto& s = std::get<Segment>(chain.pieces[edge.generators[0]]);
    return point_geodesic_distance(chain.plane, p, s.line);
}

namespace {

// Maximal disk of U containing the given disk: walk from the nearest boundary
// point through the center until the central tree is reached.
Disk maximal_cover(const BoundaryChain& chain, const std::vector<UnitPiece>& pieces, const GeodesicTree& tree,
                   const Disk& d)
{
    const Plane& plane = chain.plane;
    const int kappa = plane.kappa();
    const Vec3 p = to_unit(plane, d.center);
    const SupportContact contact = support_contact(chain, d.center);
    const Vec3 w = contact.line.normal;
    const double t = plane.unit_len(contact.margin);
    const Vec3 base = um::project(kappa, w, p);

    if (project_to_tree(tree, d.center).distance <= plane.eps) return {d.center, std::max(d.radius, contact.margin)};

    const double probe = kappa > 0 ? 0.5 : 1.0;
    const Vec3 ray = um::line_through(kappa, base, normal_ray(kappa, base, w, probe));
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](const Vec3& q) {
        const double s = um::signed_distance(kappa, w, q);
        if (s < t - kContactTol) return;
        if (um::distance(kappa, normal_ray(kappa, base, w, s), q) > 1e-8) return;
        best = std::min(best, s);
    };
    for (const TreeEdge& e : tree.edges) {
        const Vec3 a = to_unit(plane, tree.vertices[e.a].point);
        const Vec3 b = to_unit(plane, tree.vertices[e.b].point);
        const Vec3 line = um::line_through(kappa, a, b);
        const auto q = um::intersect_lines(kappa, ray, line, p);
        if (!q) continue;
        if (um::distance(kappa, a, *q) + um::distance(kappa, *q, b) > um::distance(kappa, a, b) + 1e-9) continue;
        consider(*q);
    }
    for (const TreeVertex& v : tree.vertices) {
        const Vec3 q = to_unit(plane, v.point);
        if (std::abs(um::signed_distance(kappa, ray, q)) <= 1e-9) consider(q);
    }
    if (!std::isfinite(best)) {
        // Fallback: the nearest boundary point stops being `base` once the tree is crossed.
        double lo = t, hi = t + 1e-3;
        const double cap = kappa > 0 ? 0.5 * kPi : 1e3;
        while (hi < cap && hi - unit_margin(kappa, pieces, normal_ray(kappa, base, w, hi)) < 1e-12) {
            lo = hi;
            hi = std::min(cap, t + 2 * (hi - t));
        }
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (mid - unit_margin(kappa, pieces, normal_ray(kappa, base, w, mid)) < 1e-12 ? lo : hi) = mid;
        }
        best = lo;
    }
    const Vec3 x = normal_ray(kappa, base, w, best);
    const double r = std::max(0.0, unit_margin(kappa, pieces, x));
    return {from_unit(plane, x), plane.len(r)};
}

} // namespace

Configuration sharpen(const Configuration& config)
{
    const BoundaryChain chain = hull_boundary(config);
    const GeodesicTree tree = central_tree(chain);
    const auto pieces = unit_pieces(chain);
    const Plane& plane = config.plane;

    std::vector<Disk> out;
    auto push = [&](const Disk& d) {
        for (const Disk& o : out)
            if (distance(plane, o.center, d.center) <= plane.eps && std::abs(o.radius - d.radius) <= plane.eps) return;
        out.push_back(d);
    };
    for (const Disk& d : config.disks) push(maximal_cover(chain, pieces, tree, d));
    for (const TreeVertex& v : tree.vertices) push({v.point, v.radius});
    // A disk nested in another within tolerance is not a hull disk of the result.
    std::vector<Disk> kept;
    for (std::size_t i : maximal_disks(plane, out)) kept.push_back(out[i]);
    return {plane, kept};
}

namespace {

struct TreePiece {
    Vec3 a, b;
    double ra, rb;
    Vec3 generator;
};

// min over c in the piece of d(x, c) - rho(c), with rho the distance to the generator line.
double union_gap(int kappa, const TreePiece& piece, const Vec3& x)
{
    auto g = [&](double t) {
        const Vec3 c = um::interpolate(kappa, piece.a, piece.b, t);
        return um::distance(kappa, x, c) - um::signed_distance(kappa, piece.generator, c);
    };
    constexpr int coarse = 24;
    int best_i = 0;
    double best = g(0.0);
    for (int i = 1; i <= coarse; ++i) {
        const double v = g(static_cast<double>(i) / coarse);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    double lo = std::max(0, best_i - 1) / static_cast<double>(coarse);
    double hi = std::min(coarse, best_i + 1) / static_cast<double>(coarse);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < 60; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = g(x2);
        }
    }
    return std::min({best, f1, f2});
}

} // namespace

DecompositionReport tree_decomposition_check(const Configuration& sharpened, std::size_t samples, std::uint64_t seed)
{
    const Plane& plane = sharpened.plane;
    const int kappa = plane.kappa();
    const BoundaryChain chain = hull_boundary(sharpened);
    const GeodesicTree tree = central_tree(chain);
    const auto& disks = sharpened.disks;
    const double tol = 1e-7;

    const SystemTree st = subdivide_by_centers(tree, disks, tol);
    struct Link {
        std::size_t u, v;
        Vec3 generator;
    };
    std::vector<Link> links;
    for (const SystemLink& l : st.links)
        links.push_back({l.u, l.v, std::get<Segment>(chain.pieces[tree.edges[l.edge].generators[0]]).line.normal});

    DecompositionReport rep;
    if (st.nodes.size() == 1) {
        rep.pass = true;
        return rep;
    }
    const auto [leaf, nb] = st.leaf();
    rep.leaf = leaf;
    rep.neighbor = nb;

    std::vector<TreePiece> x_pieces, y_pieces;
    for (const Link& l : links) {
        TreePiece tp{to_unit(plane, disks[l.u].center), to_unit(plane, disks[l.v].center),
                     plane.unit_len(disks[l.u].radius), plane.unit_len(disks[l.v].radius), l.generator};
        const bool is_leaf_link = (l.u == leaf && l.v == nb) || (l.u == nb && l.v == leaf);
        (is_leaf_link ? y_pieces : x_pieces).push_back(tp);
    }

    std::vector<Disk> x_disks;
    for (std::size_t i = 0; i < disks.size(); ++i)
        if (distance(plane, disks[i].center, disks[leaf].center) > tol) x_disks.push_back(disks[i]);
    const BoundaryChain chain_x = hull_boundary({plane, x_disks});
    const BoundaryChain chain_y = hull_boundary({plane, {disks[nb], disks[leaf]}});

    const double per_u = hull_perimeter(chain);
    rep.perimeter_residual =
        per_u - hull_perimeter(chain_x) - hull_perimeter(chain_y) + circle_perimeter(plane, disks[nb].radius);

    auto gap = [&](const std::vector<TreePiece>& ps, const Vec3& x) {
        double best = std::numeric_limits<double>::infinity();
        for (const TreePiece& p : ps) {
            const double da = um::distance(kappa, x, p.a) - p.ra;
            const double db = um::distance(kappa, x, p.b) - p.rb;
            best = std::min({best, da, db});
            if (best < -1e-6) return best;
        }
        for (const TreePiece& p : ps) {
            // Cheap lower bound before the one-dimensional search.
            const double seg = um::distance(kappa, p.a, p.b);
            const double lower = std::max(um::distance(kappa, x, p.a), um::distance(kappa, x, p.b)) - seg -
                                 std::max(p.ra, p.rb) - (kappa > 0 ? seg : 0.0);
            if (lower > best) continue;
            best = std::min(best, union_gap(kappa, p, x));
        }
        return best;
    };

    Disk bound{disks[0].center, 0.0};
    for (const Disk& d : disks) bound.radius = std::max(bound.radius, distance(plane, bound.center, d.center) + d.radius);
    bound.radius *= 1.05;
    if (plane.model == Model::spherical) bound.radius = std::min(bound.radius, 0.5 * kPi / plane.k);
    const Vec3 cnb = to_unit(plane, disks[nb].center);
    const double rnb = plane.unit_len(disks[nb].radius);
    CounterRng rng(seed);
    const double band = plane.unit_len(tol);
    for (std::size_t s = 0; s < samples; ++s) {
        const Point xp = sample_in_disk(plane, bound, rng);
        const Vec3 x = to_unit(plane, xp);
        const double m_u = plane.unit_len(support_margin(chain, xp));
        const double m_x = plane.unit_len(support_margin(chain_x, xp));
        const double m_y = plane.unit_len(support_margin(chain_y, xp));
        const double m_d = rnb - um::distance(kappa, x, cnb);
        const double g_x = x_pieces.empty() ? m_d * -1.0 : gap(x_pieces, x);
        const double g_y = gap(y_pieces, x);
        ++rep.samples;
        if (std::min({std::abs(m_u), std::abs(m_x), std::abs(m_y), std::abs(m_d), std::abs(g_x), std::abs(g_y)}) < band) {
            ++rep.skipped;
            continue;
        }
        const bool in_x = g_x < 0, in_y = g_y < 0;
        rep.y_mismatch += in_y != (m_y > 0);
        rep.x_mismatch += in_x != (m_x > 0);
        rep.overlap_mismatch += (in_x && in_y) != (m_d > 0);
        rep.cover_mismatch += (m_u > 0) != (in_x || in_y);
    }
    rep.pass = rep.y_mismatch == 0 && rep.x_mismatch == 0 && rep.overlap_mismatch == 0 && rep.cover_mismatch == 0 &&
               std::abs(rep.perimeter_residual) <= 1e-7 * (1.0 + per_u);
    return rep;
}

} // namespace kpg
