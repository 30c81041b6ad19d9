#include "kpgeom/kernels.hpp"

#if defined(KPGEOM_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace kpg::simd::detail {

#if defined(KPGEOM_HAVE_AVX2)

bool avx2_compiled()
{
    return true;
}

void mask_avx2(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, std::uint8_t* out)
{
    const std::size_t n = pts.size();
    const std::size_t body = n - n % 4;
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d x = _mm256_loadu_pd(&pts.x[i]);
        const __m256d y = _mm256_loadu_pd(&pts.y[i]);
        const __m256d z = _mm256_loadu_pd(&pts.z[i]);
        const __m256d w = _mm256_loadu_pd(&pts.w[i]);
        __m256d acc = all ? _mm256_castsi256_pd(_mm256_set1_epi64x(-1)) : zero;
        for (const LiftedDisk& a : disks) {
            __m256d v = _mm256_mul_pd(_mm256_set1_pd(a[0]), x);
            v = _mm256_fmadd_pd(_mm256_set1_pd(a[1]), y, v);
            v = _mm256_fmadd_pd(_mm256_set1_pd(a[2]), z, v);
            v = _mm256_fmadd_pd(_mm256_set1_pd(a[3]), w, v);
            const __m256d inside = _mm256_cmp_pd(v, zero, _CMP_GE_OQ);
            acc = all ? _mm256_and_pd(acc, inside) : _mm256_or_pd(acc, inside);
        }
        const int bits = _mm256_movemask_pd(acc);
        for (int j = 0; j < 4; ++j) out[i + static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((bits >> j) & 1);
    }
    if (body < n) {
        LiftedPoints tail;
        tail.x.assign(pts.x.begin() + static_cast<std::ptrdiff_t>(body), pts.x.end());
        tail.y.assign(pts.y.begin() + static_cast<std::ptrdiff_t>(body), pts.y.end());
        tail.z.assign(pts.z.begin() + static_cast<std::ptrdiff_t>(body), pts.z.end());
        tail.w.assign(pts.w.begin() + static_cast<std::ptrdiff_t>(body), pts.w.end());
        mask_scalar(tail, disks, all, out + body);
    }
}

#else

bool avx2_compiled()
{
    return false;
}

void mask_avx2(const LiftedPoints& pts, std::span<const LiftedDisk> disks, bool all, std::uint8_t* out)
{
    mask_scalar(pts, disks, all, out);
}

#endif

} // namespace kpg::simd::detail
