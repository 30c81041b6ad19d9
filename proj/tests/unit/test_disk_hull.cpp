#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kpgeom/disk_hull.hpp"
#include "test_support.hpp"

using namespace kpg;
using namespace kpg::testing;
using std::numbers::pi;

namespace {

int count_arcs(const BoundaryChain& c)
{
    int n = 0;
    for (const Piece& p : c.pieces) n += std::holds_alternative<Arc>(p);
    return n;
}

Point chart_pole(const Plane& plane, const std::vector<Disk>& disks)
{
    return plane.model == Model::spherical ? *hemisphere_certificate(plane, disks) : disks[0].center;
}

} // namespace

TEST_CASE("single disk and nested disks give the full circle")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Disk d{from_polar(plane, 0.4, 0.3), 0.8};
        const BoundaryChain one = hull_boundary({plane, {d}});
        REQUIRE(one.pieces.size() == 1);
        const Arc& a = std::get<Arc>(one.pieces[0]);
        CHECK(a.span() == doctest::Approx(2 * pi));
        CHECK(hull_perimeter(one) == doctest::Approx(circle_perimeter(plane, 0.8)));

        const Disk inner1{point_about(plane, d.center, 1.0, 0.3), 0.4};
        const Disk inner2{point_about(plane, d.center, 3.0, 0.5), 0.0};
        const BoundaryChain nested = hull_boundary({plane, {inner1, d, inner2}});
        REQUIRE(nested.pieces.size() == 1);
        CHECK(std::get<Arc>(nested.pieces[0]).disk_index == 1);
        CHECK(gauss_bonnet_residual(one) == doctest::Approx(0.0).scale(1.0));
    }
    CHECK_THROWS_AS(hull_boundary({Plane::euclidean(), {}}), GeometryError);
}

TEST_CASE("two euclidean unit disks at distance 3")
{
    const Plane e = Plane::euclidean();
    const std::vector<Disk> disks{{Point{{0, 0, 1}}, 1.0}, {Point{{3, 0, 1}}, 1.0}};
    const BoundaryChain c = hull_boundary({e, disks});
    REQUIRE(c.pieces.size() == 4);
    CHECK(count_arcs(c) == 2);
    for (const Piece& p : c.pieces) {
        if (const auto* s = std::get_if<Segment>(&p)) {
            CHECK(distance(e, s->start, s->end) == doctest::Approx(3.0));
            for (const Disk& d : disks)
                CHECK(std::abs(point_geodesic_distance(e, d.center, s->line) - d.radius) <= 1e-9);
        } else {
            CHECK(std::get<Arc>(p).span() == doctest::Approx(pi));
        }
    }
    CHECK(hull_perimeter(c) == doctest::Approx(2 * pi + 6));
    CHECK(polygonal_hull_perimeter(e, disks, 100000, disks[0].center) == doctest::Approx(hull_perimeter(c)).epsilon(1e-6));
    CHECK(chain_area(c) == doctest::Approx(pi + 6));
    CHECK(two_disk_perimeter(e, disks[0], disks[1]) == doctest::Approx(2 * pi + 6));
}

TEST_CASE("degenerate hulls of points")
{
    const Plane h = Plane::hyperbolic();
    const Point a = from_polar(h, 0.3, 0.5);
    const Point b = point_about(h, a, 2.0, 2.0);
    const BoundaryChain c = hull_boundary({h, {{a, 0.0}, {b, 0.0}}});
    CHECK(hull_perimeter(c) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(gauss_bonnet_residual(c) == doctest::Approx(0.0).scale(1.0));

    // A geodesic triangle: perimeter counts each side once and the turning is the angle sum.
    const Point q = point_about(h, a, 0.4, 1.5);
    const BoundaryChain tri = hull_boundary({h, {{a, 0.0}, {b, 0.0}, {q, 0.0}}});
    CHECK(hull_perimeter(tri) ==
          doctest::Approx(distance(h, a, b) + distance(h, b, q) + distance(h, q, a)).epsilon(1e-12));
    const double angle_sum = angle_at(h, a, b, q) + angle_at(h, b, a, q) + angle_at(h, q, a, b);
    CHECK(chain_area(tri) == doctest::Approx(pi - angle_sum).epsilon(1e-10));

    // Duplicated points collapse.
    const BoundaryChain dup = hull_boundary({h, {{a, 0.0}, {a, 0.0}}});
    CHECK(dup.pieces.size() == 1);
    CHECK(hull_perimeter(dup) == 0.0);
}

TEST_CASE("hull_contains")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        CounterRng rng(3);
        const auto disks = random_disks(plane, rng, 5, 0.6, 0.6);
        const BoundaryChain c = hull_boundary({plane, disks});
        for (const Disk& d : disks) CHECK(hull_contains(c, d.center));
        CHECK_FALSE(hull_contains(c, from_polar(plane, 0.0, 1.45)) == (support_margin(c, from_polar(plane, 0.0, 1.45)) < -1e-9));
        for (const Piece& p : c.pieces) {
            if (const auto* s = std::get_if<Segment>(&p)) {
                const Point mid = from_unit(plane, um::interpolate(plane.kappa(), to_unit(plane, s->start), to_unit(plane, s->end), 0.5));
                CHECK(hull_contains(c, mid));
                CHECK(std::abs(support_margin(c, mid)) <= 1e-9);
            }
        }
    }
    const Plane h = Plane::hyperbolic();
    const std::vector<Disk> disks{{origin(h), 0.5}, {from_polar(h, 1.0, 1.0), 0.3}};
    const BoundaryChain c = hull_boundary({h, disks});
    CHECK_FALSE(hull_contains(c, from_polar(h, 4.0, 2.5)));
}

TEST_CASE("random hulls: integrity, containment, tangency, Gauss-Bonnet, polygon oracle")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        CounterRng rng(101 + static_cast<int>(m));
        for (int trial = 0; trial < 60; ++trial) {
            const int n = static_cast<int>(rng.integer(1, 8));
            const auto disks = random_disks(plane, rng, n, m == Model::spherical ? 0.5 : 1.5, 1.0);
            const BoundaryChain c = hull_boundary({plane, disks});
            REQUIRE_NOTHROW(check_chain(c));
            // Alternation of arcs and segments.
            if (c.pieces.size() > 1)
                for (std::size_t i = 0; i < c.pieces.size(); ++i)
                    REQUIRE(std::holds_alternative<Arc>(c.pieces[i]) == (i % 2 == 0));
            for (const Piece& p : c.pieces) {
                const auto* s = std::get_if<Segment>(&p);
                if (!s) continue;
                const Arc& before = std::get<Arc>(c.pieces[(&p - &c.pieces[0]) - 1]);
                REQUIRE(std::abs(point_geodesic_distance(plane, before.disk.center, s->line) - before.disk.radius) <= 1e-9);
            }
            for (const Disk& d : disks)
                for (int i = 0; i < 16; ++i)
                    REQUIRE(support_margin(c, point_about(plane, d.center, i * pi / 8, d.radius)) >= -1e-9);
            for (const Piece& p : c.pieces)
                if (const auto* a = std::get_if<Arc>(&p)) REQUIRE(a->span() >= 0.0);
            REQUIRE(std::abs(gauss_bonnet_residual(c)) <= 1e-7);
            const double per = hull_perimeter(c);
            const double oracle = polygonal_hull_perimeter(plane, disks, 20000, chart_pole(plane, disks));
            REQUIRE(rel_err(oracle, per) <= 1e-6);
        }
    }
}

TEST_CASE("perimeter grows under disk insertion and is idempotent")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        CounterRng rng(55);
        for (int trial = 0; trial < 1000; ++trial) {
            auto disks = random_disks(plane, rng, static_cast<int>(rng.integer(1, 6)), m == Model::spherical ? 0.5 : 1.5, 1.0);
            const double before = hull_perimeter(hull_boundary({plane, disks}));
            disks.push_back({random_point(plane, rng, m == Model::spherical ? 0.5 : 1.5), rng.uniform(0.0, 1.0)});
            const BoundaryChain c = hull_boundary({plane, disks});
            const double after = hull_perimeter(c);
            REQUIRE(after - before >= -1e-9);
            if (trial % 20 == 0) {
                std::vector<Disk> arcs;
                for (const Piece& p : c.pieces)
                    if (const auto* a = std::get_if<Arc>(&p)) arcs.push_back(a->disk);
                const BoundaryChain again = hull_boundary({plane, arcs});
                for (const Point& x : sample_boundary(again, 8)) REQUIRE(std::abs(support_margin(c, x)) <= 1e-8);
                for (const Point& x : sample_boundary(c, 8)) REQUIRE(std::abs(support_margin(again, x)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("two_disk_perimeter")
{
    const Plane h = Plane::hyperbolic();
    const Disk d1{origin(h), 0.5};
    const Disk d2{from_polar(h, 0.7, 1.2), 0.2};
    const double formula = two_disk_perimeter(h, d1, d2);
    const double generic = hull_perimeter(hull_boundary({h, {d1, d2}}));
    const double poly = polygonal_hull_perimeter(h, std::vector<Disk>{d1, d2}, 100000, d1.center);
    CHECK(rel_err(formula, generic) <= 1e-9);
    CHECK(rel_err(formula, poly) <= 1e-8);

    CHECK(two_disk_perimeter(h, d1, {from_polar(h, 0.0, 0.1), 0.2}) == doctest::Approx(circle_perimeter(h, 0.5)));
    CHECK(two_disk_perimeter(h, d1, d1) == doctest::Approx(circle_perimeter(h, 0.5)));

    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        CounterRng rng(9);
        for (int i = 0; i < 300; ++i) {
            const Disk a{random_point(plane, rng, 0.5), rng.uniform(0.0, 1.0)};
            const Disk b{random_point(plane, rng, 0.5), rng.uniform(0.0, 1.0)};
            REQUIRE(rel_err(two_disk_perimeter(plane, a, b), hull_perimeter(hull_boundary({plane, {a, b}}))) <= 1e-9);
        }
    }
}

TEST_CASE("contracting two centers shrinks the hull in the euclidean plane and on the sphere")
{
    for (Model m : {Model::euclidean, Model::spherical}) {
        const Plane plane = plane_of(m);
        CounterRng rng(13);
        for (int trial = 0; trial < 20; ++trial) {
            const Disk d1{random_point(plane, rng, 0.3), rng.uniform(0.2, 0.6)};
            const double r2 = rng.uniform(0.0, d1.radius);
            const Point p2 = random_point(plane, rng, 0.5);
            const BoundaryChain big = hull_boundary({plane, {d1, {p2, r2}}});
            const double t = rng.uniform();
            const Point p2c = geodesic_point(plane, d1.center, p2, t);
            const BoundaryChain small = hull_boundary({plane, {d1, {p2c, r2}}});
            const auto pts = sample_boundary(small, 1000 / static_cast<int>(small.pieces.size()));
            for (const Point& x : pts) REQUIRE(support_margin(big, x) >= -1e-9);
        }
    }
}

TEST_CASE("hemisphere certificate")
{
    const Plane s = Plane::spherical();
    CounterRng rng(4);
    const auto ok = random_disks(s, rng, 6, 0.5, 1.0);
    const auto pole = hemisphere_certificate(s, ok);
    REQUIRE(pole);
    for (const Disk& d : ok) CHECK(distance(s, *pole, d.center) + d.radius <= pi / 2 + 1e-9);

    std::vector<Disk> spread;
    for (int i = 0; i < 3; ++i) spread.push_back({from_polar(s, 2 * pi * i / 3, pi / 2), 0.2});
    CHECK_FALSE(hemisphere_certificate(s, spread));
    try {
        hull_boundary({s, spread});
        FAIL("expected hemisphere error");
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::hemisphere);
    }
}
