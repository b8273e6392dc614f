// AVX2 variants of the penalty kernels. This translation unit is compiled
// with -mavx2 and only entered after the runtime CPU check passes.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "bandcol/kernels.hpp"

namespace bandcol::kernels {

void penalty_profile_avx2(std::span<const std::int32_t> colors,
                          std::span<const std::int32_t> dists,
                          std::span<std::int32_t> out) {
    const std::size_t nc = out.size();
    const std::size_t deg = colors.size();
    std::size_t i = 0;

    // Eight candidate colors per iteration; the neighbor loop stays in
    // registers ([cand+0..cand+7] vs broadcast neighbor color/distance).
    for (; i + 8 <= nc; i += 8) {
        const __m256i cand = _mm256_add_epi32(
            _mm256_set1_epi32(static_cast<int>(i) + 1),
            _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t j = 0; j < deg; ++j) {
            const __m256i cj = _mm256_set1_epi32(colors[j]);
            const __m256i dj = _mm256_set1_epi32(dists[j]);
            const __m256i gap = _mm256_sub_epi32(dj, _mm256_abs_epi32(_mm256_sub_epi32(cand, cj)));
            acc = _mm256_add_epi32(acc, _mm256_max_epi32(gap, _mm256_setzero_si256()));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), acc);
    }

    for (; i < nc; ++i) {
        const std::int32_t cand = static_cast<std::int32_t>(i) + 1;
        std::int32_t sum = 0;
        for (std::size_t j = 0; j < deg; ++j) {
            const std::int32_t delta = cand - colors[j];
            const std::int32_t gap = dists[j] - (delta < 0 ? -delta : delta);
            if (gap > 0) sum += gap;
        }
        out[i] = sum;
    }
}

std::int64_t edge_penalty_avx2(std::span<const std::int32_t> u,
                               std::span<const std::int32_t> v,
                               std::span<const std::int32_t> dist,
                               std::span<const std::int32_t> colors) {
    const std::size_t m = u.size();
    std::size_t e = 0;
    __m256i acc64 = _mm256_setzero_si256();

    for (; e + 8 <= m; e += 8) {
        const __m256i iu = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u.data() + e));
        const __m256i iv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + e));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist.data() + e));
        const __m256i cu = _mm256_i32gather_epi32(colors.data(), iu, 4);
        const __m256i cv = _mm256_i32gather_epi32(colors.data(), iv, 4);
        const __m256i gap = _mm256_sub_epi32(d, _mm256_abs_epi32(_mm256_sub_epi32(cu, cv)));
        const __m256i pen = _mm256_max_epi32(gap, _mm256_setzero_si256());
        // Widen each block to 64 bits before accumulating so long edge lists
        // cannot wrap 32-bit lanes.
        acc64 = _mm256_add_epi64(acc64, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(pen)));
        acc64 = _mm256_add_epi64(acc64, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(pen, 1)));
    }

    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc64);
    std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];

    for (; e < m; ++e) {
        const std::int32_t delta = colors[u[e]] - colors[v[e]];
        const std::int32_t gap = dist[e] - (delta < 0 ? -delta : delta);
        if (gap > 0) total += gap;
    }
    return total;
}

}  // namespace bandcol::kernels

#endif  // x86_64
