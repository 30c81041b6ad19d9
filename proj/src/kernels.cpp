#include "kpgeom/kernels.hpp"

#include <cmath>

#include "kpgeom/geometry.hpp"

namespace kpg::simd {

std::string_view to_string(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

Isa best_isa()
{
    static const Isa isa = [] {
#if defined(__x86_64__) || defined(__i386__)
        if (detail::avx2_compiled() && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
            return Isa::avx2;
#endif
        return Isa::scalar;
    }();
    return isa;
}

void LiftedPoints::clear()
{
    x.clear();
    y.clear();
    z.clear();
    w.clear();
}

void LiftedPoints::reserve(std::size_t n)
{
    x.reserve(n);
    y.reserve(n);
    z.reserve(n);
    w.reserve(n);
}

void LiftedPoints::push(int kappa, const Vec3& u)
{
    x.push_back(u.x);
    y.push_back(u.y);
    if (kappa == 0) {
        z.push_back(1.0);
        w.push_back(u.x * u.x + u.y * u.y);
    } else {
        z.push_back(u.z);
        w.push_back(1.0);
    }
}

LiftedDisk lift_disk(int kappa, const Vec3& c, double radius, double slack)
{
    const double r = radius + slack;
    if (kappa < 0) return {c.x, c.y, -c.z, std::cosh(r)};
    if (kappa > 0) return {c.x, c.y, c.z, -std::cos(r)};
    return {2.0 * c.x, 2.0 * c.y, r * r - c.x * c.x - c.y * c.y, -1.0};
}

LiftedDisk lift_disk(const Plane& plane, const Disk& disk, double slack)
{
    return lift_disk(plane.kappa(), to_unit(plane, disk.center), plane.unit_len(disk.radius),
                     plane.unit_len(slack));
}

namespace detail {

void mask_scalar(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, std::uint8_t* out)
{
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool acc = all;
        for (const LiftedDisk& a : disks) {
            const double v =
                std::fma(a[3], pts.w[i], std::fma(a[2], pts.z[i], std::fma(a[1], pts.y[i], a[0] * pts.x[i])));
            if (all)
                acc = acc && v >= 0.0;
            else
                acc = acc || v >= 0.0;
        }
        out[i] = acc ? 1 : 0;
    }
}

} // namespace detail

void mask_in_all(const LiftedPoints& pts, std::span<const LiftedDisk> disks, std::vector<std::uint8_t>& out,
                 Isa isa)
{
    out.resize(pts.size());
    if (isa == Isa::avx2)
        detail::mask_avx2(pts, disks, true, out.data());
    else
        detail::mask_scalar(pts, disks, true, out.data());
}

namespace {

std::size_t count_mask(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, Isa isa)
{
    std::vector<std::uint8_t> mask(pts.size());
    if (isa == Isa::avx2)
        detail::mask_avx2(pts, disks, all, mask.data());
    else
        detail::mask_scalar(pts, disks, all, mask.data());
    std::size_t count = 0;
    for (std::uint8_t m : mask) count += m;
    return count;
}

} // namespace

std::size_t count_in_all(const LiftedPoints& pts, std::span<const LiftedDisk> disks, Isa isa)
{
    return count_mask(pts, disks, true, isa);
}

std::size_t count_in_any(const LiftedPoints& pts, std::span<const LiftedDisk> disks, Isa isa)
{
    return count_mask(pts, disks, false, isa);
}

} // namespace kpg::simd
