#include <doctest.h>

#include "kpgeom/contraction.hpp"
#include "test_support.hpp"

using namespace kpg;
using namespace kpg::testing;

namespace {

// The center farthest from the origin is extreme, so its feasible region has interior.
std::size_t extreme_index(const Configuration& c)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < c.disks.size(); ++i)
        if (distance(c.plane, origin(c.plane), c.disks[i].center) >
            distance(c.plane, origin(c.plane), c.disks[best].center))
            best = i;
    return best;
}

} // namespace

TEST_CASE("is_contraction on simple pairs")
{
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        CounterRng rng(1);
        const Configuration c{plane, random_disks(plane, rng, 5, 0.8, 0.5)};
        CHECK(is_contraction({c, c}).ok);
        Configuration collapsed = c;
        for (Disk& d : collapsed.disks) d.center = c.disks[0].center;
        CHECK(is_contraction({c, collapsed}).ok);

        Configuration bad = c;
        bad.disks.pop_back();
        CHECK_THROWS_AS(is_contraction({c, bad}), GeometryError);
        bad = c;
        bad.disks[0].radius += 0.1;
        CHECK_THROWS_AS(is_contraction({c, bad}), GeometryError);
    }
    const Plane e = Plane::euclidean();
    const Configuration c{e, {{Point{{0, 0, 1}}, 1}, {Point{{1, 0, 1}}, 1}, {Point{{0, 1, 1}}, 1}}};
    Configuration out = c;
    out.disks[1].center = Point{{1.5, 0, 1}};
    const ContractionReport r = is_contraction({c, out});
    CHECK_FALSE(r.ok);
    CHECK(r.max_violation > 0.4);
    CHECK(r.i == 0);
    CHECK(r.j == 1);
}

TEST_CASE("radial contraction")
{
    CounterRng rng(2);
    for (Model m : {Model::hyperbolic, Model::euclidean}) {
        const Plane plane = plane_of(m);
        const Configuration c{plane, random_disks(plane, rng, 6, 2.0, 0.5)};
        const Point anchor = random_point(plane, rng, 1.0);
        const Configuration same = radial_contraction(c, anchor, 1.0);
        for (std::size_t i = 0; i < c.disks.size(); ++i) CHECK(distance(plane, same.disks[i].center, c.disks[i].center) < 1e-12);
        const Configuration point = radial_contraction(c, anchor, 0.0);
        for (const Disk& d : point.disks) CHECK(distance(plane, d.center, anchor) < 1e-12);
        const Configuration mid = radial_contraction(c, anchor, 0.7);
        CHECK(is_contraction({c, mid}).ok);
        for (std::size_t i = 0; i < c.disks.size(); ++i)
            CHECK(distance(plane, anchor, mid.disks[i].center) ==
                  doctest::Approx(0.7 * distance(plane, anchor, c.disks[i].center)));
    }
    const Plane s = Plane::spherical();
    CHECK_THROWS_AS(radial_contraction({s, {{origin(s), 0.1}}}, origin(s), 0.5), GeometryError);
}

TEST_CASE("single point move")
{
    CounterRng rng(3);
    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Configuration one{plane, {{origin(plane), 0.3}}};
        CHECK(single_point_move(one, 0, rng).disks.size() == 1);

        const Configuration two{plane, {{origin(plane), 0.3}, {from_polar(plane, 0.5, 0.7), 0.2}}};
        for (int t = 0; t < 20; ++t) {
            const Configuration moved = single_point_move(two, 0, rng);
            CHECK(distance(plane, moved.disks[0].center, two.disks[1].center) <= 0.7 + 1e-12);
        }
        const Configuration five{plane, random_disks(plane, rng, 5, 0.6, 0.3)};
        for (int t = 0; t < 20; ++t) CHECK(is_contraction({five, single_point_move(five, extreme_index(five), rng)}).ok);

        // An interior center cannot move at all.
        const Configuration tri{plane, {{from_polar(plane, 0.0, 0.5), 0.1}, {from_polar(plane, 2.1, 0.5), 0.1},
                                        {from_polar(plane, 4.2, 0.5), 0.1}, {origin(plane), 0.1}}};
        CHECK_THROWS_AS(single_point_move(tri, 3, rng, 1000), GeometryError);
    }
}

TEST_CASE("composition of contractions")
{
    const Plane e = Plane::euclidean();
    CounterRng rng(4);
    const Configuration c{e, random_disks(e, rng, 5, 2.0, 0.5)};
    const Point anchor = random_point(e, rng, 1.0);
    const Generator steps[] = {[&](const Configuration& x) { return radial_contraction(x, anchor, 0.5); },
                               [&](const Configuration& x) { return radial_contraction(x, anchor, 0.6); }};
    const Configuration two = compose(c, steps);
    const Configuration one = radial_contraction(c, anchor, 0.3);
    for (std::size_t i = 0; i < c.disks.size(); ++i) CHECK(distance(e, two.disks[i].center, one.disks[i].center) < 1e-12);
    const Configuration none = compose(c, {});
    for (std::size_t i = 0; i < c.disks.size(); ++i) CHECK(none.disks[i].center == c.disks[i].center);

    for (Model m : kAllModels) {
        const Plane plane = plane_of(m);
        const Configuration start{plane, random_disks(plane, rng, 6, 0.6, 0.3)};
        std::vector<Generator> gens;
        for (int k = 0; k < 4; ++k)
            gens.push_back([&rng](const Configuration& x) { return single_point_move(x, extreme_index(x), rng); });
        if (m != Model::spherical)
            gens.push_back([&](const Configuration& x) { return radial_contraction(x, origin(plane), 0.8); });
        const Configuration end = compose(start, gens);
        CHECK(is_contraction({start, end}).ok);
    }
}
