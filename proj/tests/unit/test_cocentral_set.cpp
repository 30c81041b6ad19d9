#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kpgeom/cocentral_set.hpp"
#include "test_support.hpp"

using namespace kpg;
using namespace kpg::testing;
using std::numbers::pi;

namespace {

Point euclid(double x, double y)
{
    return Point{{x, y, 1.0}};
}

// Disks all containing a small neighbourhood of the origin.
std::vector<Disk> overlapping_disks(const Plane& plane, CounterRng& rng, int n)
{
    const bool sphere = plane.model == Model::spherical;
    std::vector<Disk> disks;
    for (int i = 0; i < n; ++i) {
        const double d = rng.uniform(0.1, sphere ? 0.3 : 0.9);
        const Point c = from_polar(plane, rng.angle(), d);
        disks.push_back({c, d + rng.uniform(0.1, sphere ? 0.5 : 1.2)});
    }
    return disks;
}

std::vector<Point> region_samples(const IntersectionRegion& u, int per_arc)
{
    std::vector<Point> pts = sample_boundary(u.chain, per_arc);
    pts.insert(pts.end(), u.vertices.begin(), u.vertices.end());
    return pts;
}

// Brute-force covering radius over sampled boundary points.
double brute_cover(const Plane& plane, const std::vector<Point>& pts, const Point& c)
{
    double r = 0.0;
    for (const Point& p : pts) r = std::max(r, distance(plane, c, p));
    return r;
}

} // namespace

TEST_CASE("spindle examples")
{
    const Plane e = Plane::euclidean();
    const Spindle s = spindle(e, euclid(0, 0), euclid(1, 0), 1.0);
    for (const Disk& d : {s.d1, s.d2}) {
        CHECK(d.center.coords.x == doctest::Approx(0.5));
        CHECK(std::abs(d.center.coords.y) == doctest::Approx(std::sqrt(3.0) / 2));
        CHECK(d.radius == 1.0);
    }
    CHECK(s.d1.center.coords.y * s.d2.center.coords.y < 0.0);
    CHECK(spindle_contains(s, euclid(0.5, 0.0)));
    CHECK(spindle_contains(s, euclid(0.5, 1 - std::sqrt(3.0) / 2 - 1e-9)));
    CHECK_FALSE(spindle_contains(s, euclid(0.5, 1 - std::sqrt(3.0) / 2 + 1e-6)));

    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Point p = from_polar(plane, 0.3, 0.4);
        const Spindle point = spindle(plane, p, p, 0.7);
        CHECK(point.region.single_point());

        const Point q = point_about(plane, p, 1.1, 1.2);
        const Spindle full = spindle(plane, p, q, 0.6);
        CHECK(full.region.full_disk_flag);
        CHECK(distance(plane, full.d1.center, geodesic_point(plane, p, q, 0.5)) < 1e-9);
        CHECK_THROWS_AS(spindle(plane, p, q, 0.5), GeometryError);

        const Spindle mid = spindle(plane, p, q, 0.8);
        for (const Disk& d : {mid.d1, mid.d2}) {
            CHECK(distance(plane, d.center, p) == doctest::Approx(0.8));
            CHECK(distance(plane, d.center, q) == doctest::Approx(0.8));
        }
        for (int i = 0; i <= 10; ++i) CHECK(spindle_contains(mid, geodesic_point(plane, p, q, i / 10.0), 1e-12));
    }
}

TEST_CASE("lens: co-central tree is the segment of centers")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Disk a{origin(plane), 0.8};
        const Disk b{from_polar(plane, 0.0, 0.6), 0.7};
        const IntersectionRegion u = intersect_disks({plane, {a, b}});
        const GeodesicTree t = cocentral_tree(u);
        REQUIRE(t.vertices.size() == 2);
        REQUIRE(t.edges.size() == 1);
        const double d0 = std::min(distance(plane, t.vertices[0].point, a.center), distance(plane, t.vertices[1].point, a.center));
        const double d1 = std::min(distance(plane, t.vertices[0].point, b.center), distance(plane, t.vertices[1].point, b.center));
        CHECK(d0 < 1e-12);
        CHECK(d1 < 1e-12);

        const CenterSegment seg = min_covering_disk_on_bisector(u, 0, 1);
        REQUIRE_FALSE(seg.empty);
        CHECK(distance(plane, seg.a, seg.b) == doctest::Approx(0.6));

        // Scan the line of centers: B(c, f(c)) passes through both lens
        // vertices exactly on the segment [p_1, p_2].
        const auto pts = region_samples(u, 400);
        double lo = 1e9, hi = -1e9;
        for (int i = -200; i <= 400; ++i) {
            const double s = i / 200.0;
            const Point c = from_polar(plane, s >= 0 ? 0.0 : pi, std::abs(s) * 0.6);
            const double f = brute_cover(plane, pts, c);
            const double dq = distance(plane, c, u.vertices[0]);
            if (std::abs(f - dq) < 1e-6 && std::abs(f - distance(plane, c, u.vertices[1])) < 1e-6) {
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        }
        CHECK(lo == doctest::Approx(0.0).epsilon(0.006));
        CHECK(hi == doctest::Approx(1.0).epsilon(0.006));
    }
}

TEST_CASE("single disk region and symmetric regions")
{
    const Plane plane = Plane::euclidean();
    const IntersectionRegion one = intersect_disks({plane, {{euclid(0.2, 0.1), 1.0}}});
    const GeodesicTree t1 = cocentral_tree(one);
    CHECK(t1.vertices.size() == 1);
    CHECK(t1.edges.empty());

    // Equilateral centers: three spokes meeting at the center.
    const double h = std::sqrt(3.0);
    const IntersectionRegion tri =
        intersect_disks({plane, {{euclid(0, 0), 1.5}, {euclid(2, 0), 1.5}, {euclid(1, h), 1.5}}});
    const GeodesicTree t3 = cocentral_tree(tri);
    CHECK(t3.vertices.size() == 4);
    CHECK(t3.edges.size() == 3);
    CHECK(certify_tree(t3).ok());
    bool hub = false;
    for (std::size_t v = 0; v < t3.vertices.size(); ++v)
        if (t3.degree(v) == 3) {
            hub = true;
            CHECK(t3.vertices[v].point.coords.x == doctest::Approx(1.0));
            CHECK(t3.vertices[v].point.coords.y == doctest::Approx(h / 3));
        }
    CHECK(hub);

    // Four congruent disks on a square: an X with five vertices.
    const IntersectionRegion sq = intersect_disks(
        {plane, {{euclid(1, 1), 1.6}, {euclid(-1, 1), 1.6}, {euclid(-1, -1), 1.6}, {euclid(1, -1), 1.6}}});
    REQUIRE(sq.vertices.size() == 4);
    const GeodesicTree t4 = cocentral_tree(sq);
    CHECK(t4.vertices.size() == 5);
    CHECK(t4.edges.size() == 4);
    CHECK(certify_tree(t4).ok());
    for (std::size_t v = 0; v < t4.vertices.size(); ++v)
        if (t4.degree(v) == 4) CHECK(std::hypot(t4.vertices[v].point.coords.x, t4.vertices[v].point.coords.y) < 1e-12);
}

TEST_CASE("random co-central trees")
{
    CounterRng rng(21);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int trial = 0; trial < 40; ++trial) {
            const auto disks = overlapping_disks(plane, rng, static_cast<int>(rng.integer(2, 7)));
            const IntersectionRegion u = intersect_disks({plane, disks});
            REQUIRE(!u.empty_flag);
            const GeodesicTree t = cocentral_tree(u);
            CHECK(certify_tree(t).ok());
            double rmax = 0.0;
            for (const Disk& d : disks) rmax = std::max(rmax, d.radius);
            const auto pts = region_samples(u, 64);
            for (std::size_t v = 0; v < t.vertices.size(); ++v) {
                const TreeVertex& tv = t.vertices[v];
                CHECK(tv.radius <= rmax + 1e-9);
                if (m == Model::hyperbolic) CHECK(circle_geodesic_curvature(plane, tv.radius) > plane.k + 1e-9);
                const double f = brute_cover(plane, pts, tv.point);
                CHECK(f <= tv.radius + 1e-9);
                // Shrinking loses coverage.
                CHECK(f > tv.radius - 1e-6);
                const CoveringDisk cd = covering_disk_at(u, tv.point);
                CHECK(cd.minimal());
                CHECK(cd.disk.radius == doctest::Approx(tv.radius).epsilon(1e-12));
                if (!cd.along_arc) {
                    CHECK(tv.contacts.size() >= 3);
                    CHECK(t.degree(v) >= tv.contacts.size());
                }
            }
            // Edge midpoints are equidistant from their generating vertices and minimal.
            for (const TreeEdge& e : t.edges) {
                const Point mid = geodesic_point(plane, t.vertices[e.a].point, t.vertices[e.b].point, 0.5);
                const double da = distance(plane, mid, u.vertices[e.generators[0]]);
                const double db = distance(plane, mid, u.vertices[e.generators[1]]);
                CHECK(da == doctest::Approx(db).epsilon(1e-8));
                const CoveringDisk cd = covering_disk_at(u, mid);
                CHECK(cd.minimal());
                CHECK(cd.disk.radius == doctest::Approx(da).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("spindles of point pairs stay inside the region")
{
    CounterRng rng(5);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int trial = 0; trial < 20; ++trial) {
            const auto disks = overlapping_disks(plane, rng, 4);
            const IntersectionRegion u = intersect_disks({plane, disks});
            double rmax = 0.0;
            for (const Disk& d : disks) rmax = std::max(rmax, d.radius);
            const auto pts = region_samples(u, 8);
            for (int k = 0; k < 5; ++k) {
                const Point& p = pts[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(pts.size()) - 1))];
                const Point& q = pts[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(pts.size()) - 1))];
                if (distance(plane, p, q) < 1e-6) continue;
                const Spindle s = spindle(plane, p, q, rmax);
                if (s.region.chain.pieces.empty()) continue;
                for (const Point& x : sample_boundary(s.region.chain, 50)) CHECK(region_contains(u, x, 1e-9));
            }
        }
    }
}

TEST_CASE("cocentral sharpen")
{
    const Plane plane = Plane::euclidean();
    const Disk a{euclid(0, 0), 1.0};
    const Disk b{euclid(1, 0), 1.0};
    const Configuration lens = cocentral_sharpen({plane, {a, b}});
    CHECK(lens.disks.size() == 2);

    const Configuration third = cocentral_sharpen({plane, {a, b, {euclid(0.3, 2.0), 5.0}}});
    REQUIRE(third.disks.size() == 3);
    const Disk& c = third.disks[2];
    CHECK(std::abs(c.center.coords.y) < 1e-9);
    CHECK(c.center.coords.x > -1e-9);
    CHECK(c.center.coords.x < 1 + 1e-9);
    CHECK(5.0 - c.radius >= distance(plane, c.center, euclid(0.3, 2.0)) - 1e-9);

    CounterRng rng(9);
    for (Model m : kAllModels) {
        const Plane pl = plane_of(m);
        for (int trial = 0; trial < 30; ++trial) {
            const auto disks = overlapping_disks(pl, rng, static_cast<int>(rng.integer(2, 6)));
            const IntersectionRegion u = intersect_disks({pl, disks});
            const Configuration s = cocentral_sharpen({pl, disks});
            const IntersectionRegion v = intersect_disks(s);
            CHECK(region_area(v) == doctest::Approx(region_area(u)).epsilon(1e-9));
            for (const Disk& d : s.disks) {
                const CoveringDisk cd = covering_disk_at(u, d.center);
                CHECK(cd.minimal());
                CHECK(cd.disk.radius == doctest::Approx(d.radius).epsilon(1e-9));
            }
            // Every input disk contains one of the outputs with r - r' >= d(p, p').
            for (const Disk& d : disks) {
                bool found = false;
                for (const Disk& e : s.disks)
                    found |= d.radius - e.radius >= distance(pl, d.center, e.center) - 1e-9;
                CHECK(found);
            }
            const GeodesicTree t = cocentral_tree(v);
            for (const TreeVertex& tv : t.vertices) {
                bool present = false;
                for (const Disk& e : s.disks)
                    present |= distance(pl, tv.point, e.center) < 1e-7 && std::abs(tv.radius - e.radius) < 1e-7;
                CHECK(present);
            }
        }
    }
}

TEST_CASE("duality with the central set of the dual union")
{
    CounterRng rng(13);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const IntersectionRegion one = intersect_disks({plane, {{from_polar(plane, 1.0, 0.2), 0.7}}});
        CHECK(duality_check(one).pass);
        const IntersectionRegion lens =
            intersect_disks({plane, {{origin(plane), 0.8}, {from_polar(plane, 0.0, 0.6), 0.7}}});
        const DualityReport lr = duality_check(lens);
        CHECK(lr.pass);
        CHECK(lr.dual_vertices == 2);
        for (int trial = 0; trial < 20; ++trial) {
            const auto disks = overlapping_disks(plane, rng, 4);
            const DualityReport r = duality_check(intersect_disks({plane, disks}));
            CHECK(r.pass);
            CHECK(r.vertices == r.dual_vertices);
            CHECK(r.max_vertex_error < 1e-6);
        }
    }
}

TEST_CASE("co-central leaf decomposition")
{
    const Plane e = Plane::euclidean();
    // Lens: leaf and neighbour are the two disks, U_{k-1} is the other disk.
    const Configuration lens = cocentral_sharpen({e, {{Point{{0, 0, 1}}, 1}, {Point{{1, 0, 1}}, 1}}});
    const CocentralDecompositionReport r = cocentral_decomposition_check(lens, 2000);
    CHECK(r.pass);
    CHECK(std::abs(r.area_residual) < 1e-12);

    CounterRng rng(17);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int t = 0; t < 15; ++t) {
            const auto disks = overlapping_disks(plane, rng, static_cast<int>(rng.integer(2, 6)));
            const Configuration sharp = cocentral_sharpen({plane, disks});
            const CocentralDecompositionReport rep = cocentral_decomposition_check(sharp, 2000, 100 + t);
            CHECK(rep.containment_mismatch == 0);
            CHECK(std::abs(rep.area_residual) < 1e-8);
            CHECK(rep.pass);
        }
    }

    // An unsharpened system is rejected.
    const Configuration raw{e, {{Point{{0, 0, 1}}, 1}, {Point{{1, 0, 1}}, 1}, {Point{{0.5, 3, 1}}, 5}}};
    CHECK_THROWS_AS(cocentral_decomposition_check(raw), GeometryError);
}
