#pragma once

// Batched disk-membership kernels. A point u of the unit model is lifted to a
// 4-vector X(u) and a disk to a 4-vector A so that u lies in the disk iff
// A . X(u) >= 0:
//   hyperbolic  X = (x, y, z, 1)         A = (cx, cy, -cz, cosh R)
//   spherical   X = (x, y, z, 1)         A = (cx, cy, cz, -cos R)
//   euclidean   X = (x, y, 1, x^2+y^2)   A = (2cx, 2cy, R^2 - |c|^2, -1)
// The scalar path is the reference; the AVX2 path evaluates the same fused
// multiply-add chain and must agree bit for bit.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kpgeom/plane.hpp"

namespace kpg::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
/// Best instruction set supported by this build and the running CPU.
Isa best_isa();

using LiftedDisk = std::array<double, 4>;

/// Structure-of-arrays block of lifted points.
struct LiftedPoints {
    std::vector<double> x, y, z, w;

    std::size_t size() const { return x.size(); }
    void clear();
    void reserve(std::size_t n);
    /// Appends a unit-model point.
    void push(int kappa, const Vec3& u);
};

/// Lifted disk for a disk given in the unit model, with its radius enlarged by `slack`.
LiftedDisk lift_disk(int kappa, const Vec3& center, double radius, double slack = 0.0);
LiftedDisk lift_disk(const Plane& plane, const Disk& disk, double slack = 0.0);

/// out[i] = 1 iff point i lies in every disk.
void mask_in_all(const LiftedPoints& pts, std::span<const LiftedDisk> disks, std::vector<std::uint8_t>& out,
                 Isa isa = best_isa());
std::size_t count_in_all(const LiftedPoints& pts, std::span<const LiftedDisk> disks, Isa isa = best_isa());
std::size_t count_in_any(const LiftedPoints& pts, std::span<const LiftedDisk> disks, Isa isa = best_isa());

namespace detail {
// Per-ISA entry points; `all` selects intersection (true) or union (false).
void mask_scalar(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, std::uint8_t* out);
void mask_avx2(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, std::uint8_t* out);
bool avx2_compiled();
} // namespace detail

} // namespace kpg::simd
