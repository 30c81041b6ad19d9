#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kpgeom/disk_intersection.hpp"
#include "kpgeom/monte_carlo.hpp"
#include "test_support.hpp"

using namespace kpg;
using namespace kpg::testing;
using std::numbers::pi;

namespace {

Point euclid(double x, double y)
{
    return Point{{x, y, 1.0}};
}

// Area by radial quadrature about an interior point, with the boundary
// distance in each direction found by bisection on membership.
double radial_area(const IntersectionRegion& u, const Point& o, int directions)
{
    const Plane& plane = u.plane;
    const int kappa = plane.kappa();
    double total = 0.0;
    for (int i = 0; i < directions; ++i) {
        const double th = 2 * pi * (i + 0.5) / directions;
        double lo = 0.0, hi = 0.0;
        for (const Disk& d : u.disks) hi = std::max(hi, distance(plane, o, d.center) + d.radius);
        for (int it = 0; it < 56; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (region_contains(u, point_about(plane, o, th, mid))) lo = mid;
            else hi = mid;
        }
        const double r = plane.unit_len(lo);
        const double s = plane.scale();
        const double inner = kappa == 0 ? 0.5 * r * r : (cs(kappa, r) - 1.0) / -kappa;
        total += inner / (s * s);
    }
    return total * 2 * pi / directions;
}

// Grid minimum of max_i d - r_i in the projective chart around `pole`.
double grid_minimax(const Plane& plane, const std::vector<Disk>& disks, const Point& pole, double half, int n)
{
    const ProjectiveChart chart(plane, pole);
    double best = 1e300;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const Point p = from_unit(plane, chart.back({-half + 2 * half * i / n, -half + 2 * half * j / n}));
            double worst = -1e300;
            for (const Disk& d : disks) worst = std::max(worst, distance(plane, p, d.center) - d.radius);
            best = std::min(best, worst);
        }
    return best;
}

} // namespace

TEST_CASE("lens of two unit disks")
{
    const Plane plane = Plane::euclidean();
    const IntersectionRegion u = intersect_disks({plane, {{euclid(0, 0), 1.0}, {euclid(1, 0), 1.0}}});
    REQUIRE_FALSE(u.empty_flag);
    REQUIRE(u.vertices.size() == 2);
    bool upper = false, lower = false;
    for (const Point& q : u.vertices) {
        CHECK(q.coords.x == doctest::Approx(0.5));
        upper |= std::abs(q.coords.y - std::sqrt(3.0) / 2) < 1e-12;
        lower |= std::abs(q.coords.y + std::sqrt(3.0) / 2) < 1e-12;
    }
    CHECK(upper);
    CHECK(lower);
    const double exact = 2 * pi / 3 - std::sqrt(3.0) / 2;
    CHECK(region_area(u) == doctest::Approx(exact).epsilon(1e-13));

    McOptions opt;
    opt.samples = 1'000'000;
    const McEstimate mc = mc_intersection_area(plane, u.disks, opt);
    CHECK(std::abs(mc.area - exact) <= 3 * mc.std_error);
}

TEST_CASE("three pairwise overlapping disks with empty intersection")
{
    const Plane plane = Plane::euclidean();
    const double h = std::sqrt(3.0);
    std::vector<Disk> disks{{euclid(0, 0), 1.05}, {euclid(2, 0), 1.05}, {euclid(1, h), 1.05}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK_FALSE(intersect_disks({plane, {disks[i], disks[j]}}).empty_flag);
    const IntersectionRegion u = intersect_disks({plane, disks});
    CHECK(u.empty_flag);
    CHECK(region_area(u) == 0.0);
    const Witness w = is_nonempty({plane, disks});
    CHECK_FALSE(w.nonempty);
    CHECK(w.value == doctest::Approx(2 / h - 1.05).epsilon(1e-9));

    for (Disk& d : disks) d.radius = 2 / h + 1e-6;
    const IntersectionRegion v = intersect_disks({plane, disks});
    CHECK_FALSE(v.empty_flag);
    CHECK(v.vertices.size() == 3);
}

TEST_CASE("tangent disks meet in a single point")
{
    const Plane plane = Plane::euclidean();
    const IntersectionRegion u = intersect_disks({plane, {{euclid(0, 0), 1.0}, {euclid(2, 0), 1.0}}});
    CHECK_FALSE(u.empty_flag);
    CHECK(region_area(u) == doctest::Approx(0.0));
    REQUIRE_FALSE(u.vertices.empty());
    CHECK(u.vertices[0].coords.x == doctest::Approx(1.0).epsilon(1e-6));

    const IntersectionRegion p = intersect_disks({plane, {{euclid(0.3, 0.1), 0.0}, {euclid(0, 0), 1.0}}});
    CHECK(p.single_point());
    CHECK(region_area(p) == 0.0);
}

TEST_CASE("nested disks give the smaller disk")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Disk big{origin(plane), 1.0};
        const Disk small{from_polar(plane, 0.3, 0.4), 0.5};
        const IntersectionRegion u = intersect_disks({plane, {big, small}});
        CHECK(u.full_disk_flag);
        CHECK(u.full_index == 1);
        CHECK(region_area(u) == doctest::Approx(circle_area(plane, 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("internally tangent disk adds no boundary vertex")
{
    // B contains A and touches it at a point of the A-arc of A cap C.
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int k = 0; k < 100; ++k) {
            const double phi = 0.0613 * k;
            const Point a = from_polar(plane, phi + 1.0, 0.1);
            const Disk A{a, 0.5};
            const Disk B{point_about(plane, a, phi + pi, 0.2), 0.7};
            const Disk C{point_about(plane, a, phi, 0.3), 0.5};
            const IntersectionRegion u = intersect_disks({plane, {A, B, C}});
            REQUIRE(u.chain.pieces.size() == 2);
            const IntersectionRegion lens = intersect_disks({plane, {A, C}});
            CHECK(region_area(u) == doctest::Approx(region_area(lens)).epsilon(1e-12));
        }
    }
}

TEST_CASE("area against radial quadrature and Gauss-Bonnet against caps")
{
    CounterRng rng(7);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        int nonempty = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = static_cast<int>(rng.integer(2, 6));
            const double reach = m == Model::spherical ? 0.5 : 1.0;
            const auto disks = random_disks(plane, rng, n, reach, m == Model::spherical ? 1.0 : 1.5);
            const IntersectionRegion u = intersect_disks({plane, disks});
            const Witness w = is_nonempty({plane, disks});
            CHECK(w.nonempty != u.empty_flag);
            if (u.empty_flag || u.chain.pieces.empty()) continue;
            ++nonempty;
            for (const Point& q : u.vertices) CHECK(region_contains(u, q, 1e-9));
            for (const Point& q : sample_boundary(u.chain, 4)) CHECK(region_contains(u, q, 1e-9));
            const double area = region_area(u);
            CHECK(area == doctest::Approx(region_area_by_caps(u)).epsilon(1e-9));
            CHECK(area == doctest::Approx(radial_area(u, w.point, 2000)).epsilon(1e-5));
        }
        CHECK(nonempty > 10);
    }
}

TEST_CASE("area decreases when a radius decreases")
{
    CounterRng rng(11);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int trial = 0; trial < 100; ++trial) {
            auto disks = random_disks(plane, rng, 3, 0.6, 1.2);
            const double before = region_area(intersect_disks({plane, disks}));
            const std::size_t i = static_cast<std::size_t>(rng.integer(0, 2));
            disks[i].radius *= rng.uniform();
            const double after = region_area(intersect_disks({plane, disks}));
            CHECK(after <= before + 1e-12);
        }
    }
}

TEST_CASE("inclusion-exclusion for two disks against the union estimate")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Disk a{origin(plane), 0.9};
        const Disk b{from_polar(plane, 1.0, 0.8), 0.6};
        const double cap = region_area(intersect_disks({plane, {a, b}}));
        McOptions opt;
        opt.samples = 1'000'000;
        const std::vector<Disk> both{a, b};
        const McEstimate uni = mc_union_area(plane, both, opt);
        const double expect = circle_area(plane, a.radius) + circle_area(plane, b.radius) - cap;
        CHECK(std::abs(uni.area - expect) <= 4 * uni.std_error);
    }
}

TEST_CASE("minimax witness against a grid search")
{
    CounterRng rng(3);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        for (int trial = 0; trial < 6; ++trial) {
            const auto disks = random_disks(plane, rng, 4, 0.8, 0.5);
            const Witness w = is_nonempty({plane, disks});
            const Point pole = m == Model::spherical ? *hemisphere_certificate(plane, disks) : origin(plane);
            const double grid = grid_minimax(plane, disks, pole, 0.7, 300);
            CHECK(w.value <= grid + 1e-12);
            CHECK(w.value >= grid - 0.02);
        }
    }
}
