#include "kpgeom/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kpgeom/monte_carlo.hpp"

namespace kpg {

namespace {

void certify(const Configuration& before, const Configuration& after)
{
    if (!is_contraction({before, after}).ok)
        throw GeometryError(ErrorCode::domain, "generator output is not a contraction");
    if (after.plane.model == Model::spherical && !hemisphere_certificate(after.plane, after.disks))
        throw GeometryError(ErrorCode::hemisphere, "contracted disks left every hemisphere");
}

} // namespace

ContractionReport is_contraction(const ContractionPair& pair, double tol)
{
    const Configuration& a = pair.original;
    const Configuration& b = pair.contracted;
    if (!(a.plane == b.plane)) throw GeometryError(ErrorCode::domain, "configurations live in different planes");
    if (a.disks.size() != b.disks.size()) throw GeometryError(ErrorCode::domain, "configurations differ in length");
    for (std::size_t i = 0; i < a.disks.size(); ++i)
        if (a.disks[i].radius != b.disks[i].radius) throw GeometryError(ErrorCode::domain, "radii differ");
    if (tol < 0.0) tol = a.plane.eps;

    ContractionReport rep;
    rep.max_violation = a.disks.size() < 2 ? 0.0 : -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.disks.size(); ++i)
        for (std::size_t j = i + 1; j < a.disks.size(); ++j) {
            const double v = distance(a.plane, b.disks[i].center, b.disks[j].center) -
                             distance(a.plane, a.disks[i].center, a.disks[j].center);
            if (v > rep.max_violation) {
                rep.max_violation = v;
                rep.i = i;
                rep.j = j;
            }
        }
    rep.ok = rep.max_violation <= tol;
    return rep;
}

Configuration radial_contraction(const Configuration& config, const Point& anchor, double lambda)
{
    if (config.plane.model == Model::spherical)
        throw GeometryError(ErrorCode::unsupported_generator, "radial contraction is not a contraction on the sphere");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw GeometryError(ErrorCode::domain, "lambda must lie in [0, 1]");
    validate(config.plane, anchor);
    Configuration out = config;
    for (Disk& d : out.disks) d.center = geodesic_point(config.plane, anchor, d.center, lambda);
    certify(config, out);
    return out;
}

Configuration single_point_move(const Configuration& config, std::size_t i, CounterRng& rng, int trials)
{
    const Plane& plane = config.plane;
    if (i >= config.disks.size()) throw GeometryError(ErrorCode::domain, "disk index out of range");
    const Point& p = config.disks[i].center;

    std::vector<Disk> balls;
    for (std::size_t j = 0; j < config.disks.size(); ++j)
        if (j != i) balls.push_back({config.disks[j].center, distance(plane, p, config.disks[j].center)});
    if (balls.empty()) {
        // A single point can go anywhere; stay within unit distance.
        const double reach = plane.model == Model::spherical ? std::min(1.0, 0.25 / plane.k) : 1.0;
        balls.push_back({p, reach});
    }
    const auto smallest = std::min_element(balls.begin(), balls.end(),
                                           [](const Disk& x, const Disk& y) { return x.radius < y.radius; });
    if (smallest->radius <= plane.eps) return config;

    Configuration out = config;
    for (int t = 0; t < trials; ++t) {
        const Point x = sample_in_disk(plane, *smallest, rng);
        bool inside = true;
        for (const Disk& b : balls)
            if (distance(plane, x, b.center) > b.radius) {
                inside = false;
                break;
            }
        if (!inside) continue;
        out.disks[i].center = x;
        if (plane.model == Model::spherical && !hemisphere_certificate(plane, out.disks)) continue;
        certify(config, out);
        return out;
    }
    throw GeometryError(ErrorCode::sampling, "rejection sampler exhausted");
}

Configuration compose(const Configuration& config, std::span<const Generator> steps)
{
    Configuration cur = config;
    for (const Generator& g : steps) {
        Configuration next = g(cur);
        certify(cur, next);
        cur = std::move(next);
    }
    certify(config, cur);
    return cur;
}

} // namespace kpg
