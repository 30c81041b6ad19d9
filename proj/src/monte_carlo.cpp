#include "kpgeom/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

namespace kpg {

namespace {

Vec3 sample_unit(int kappa, const um::Frame& frame, double radius, CounterRng& rng)
{
    // The area of a disk of radius s is proportional to sn(s/2)^2.
    const double s = 2.0 * asn(kappa, std::sqrt(rng.uniform()) * sn(kappa, 0.5 * radius));
    return frame.world(um::polar_point(kappa, rng.angle(), s));
}

std::size_t count_shard(const Plane& plane, const Disk& bound, std::span<const simd::LiftedDisk> lifted, bool all,
                        std::size_t n, std::uint64_t seed, simd::Isa isa)
{
    const int kappa = plane.kappa();
    const um::Frame frame = um::frame_at(kappa, to_unit(plane, bound.center));
    const double radius = plane.unit_len(bound.radius);
    CounterRng rng(seed);
    constexpr std::size_t batch = 4096;
    simd::LiftedPoints pts;
    pts.reserve(batch);
    std::size_t hits = 0;
    for (std::size_t done = 0; done < n;) {
        const std::size_t m = std::min(batch, n - done);
        pts.clear();
        for (std::size_t i = 0; i < m; ++i) pts.push(kappa, sample_unit(kappa, frame, radius, rng));
        hits += all ? simd::count_in_all(pts, lifted, isa) : simd::count_in_any(pts, lifted, isa);
        done += m;
    }
    return hits;
}

McEstimate estimate(const Plane& plane, const Disk& bound, std::span<const Disk> disks, bool all,
                    const McOptions& opt)
{
    std::vector<simd::LiftedDisk> lifted;
    for (const Disk& d : disks) lifted.push_back(simd::lift_disk(plane, d));
    const unsigned shards = std::max(1u, opt.shards);
    std::vector<std::size_t> sizes(shards, opt.samples / shards);
    for (std::size_t i = 0; i < opt.samples % shards; ++i) ++sizes[i];

    std::vector<std::size_t> hits(shards, 0);
    const unsigned workers = std::clamp(opt.workers, 1u, shards);
    auto run = [&](unsigned first) {
        for (unsigned s = first; s < shards; s += workers)
            hits[s] = count_shard(plane, bound, lifted, all, sizes[s], derive_seed(opt.seed, s), opt.isa);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w));
        for (auto& j : jobs) j.get();
    }

    McEstimate est;
    est.samples = opt.samples;
    for (std::size_t h : hits) est.hits += h;
    const double a = circle_area(plane, bound.radius);
    const double p = opt.samples ? static_cast<double>(est.hits) / static_cast<double>(opt.samples) : 0.0;
    est.area = a * p;
    est.std_error = opt.samples ? a * std::sqrt(p * (1.0 - p) / static_cast<double>(opt.samples)) : 0.0;
    return est;
}

} // namespace

Point sample_in_disk(const Plane& plane, const Disk& disk, CounterRng& rng)
{
    const int kappa = plane.kappa();
    const um::Frame frame = um::frame_at(kappa, to_unit(plane, disk.center));
    return from_unit(plane, sample_unit(kappa, frame, plane.unit_len(disk.radius), rng));
}

McEstimate mc_intersection_area(const Plane& plane, std::span<const Disk> disks, const McOptions& opt)
{
    if (disks.empty()) throw GeometryError(ErrorCode::domain, "no disks");
    const auto smallest = std::min_element(disks.begin(), disks.end(),
                                           [](const Disk& a, const Disk& b) { return a.radius < b.radius; });
    return estimate(plane, *smallest, disks, true, opt);
}

McEstimate mc_union_area(const Plane& plane, std::span<const Disk> disks, const McOptions& opt)
{
    if (disks.empty()) throw GeometryError(ErrorCode::domain, "no disks");
    Disk bound{disks[0].center, 0.0};
    for (const Disk& d : disks) bound.radius = std::max(bound.radius, distance(plane, bound.center, d.center) + d.radius);
    if (plane.model == Model::spherical && plane.unit_len(bound.radius) >= std::numbers::pi)
        throw GeometryError(ErrorCode::hemisphere, "union does not fit in a sampling cap");
    return estimate(plane, bound, disks, false, opt);
}

} // namespace kpg
