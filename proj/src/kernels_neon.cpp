// NEON variants of the penalty kernels for aarch64 builds.

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include "bandcol/kernels.hpp"

namespace bandcol::kernels {

void penalty_profile_neon(std::span<const std::int32_t> colors,
                          std::span<const std::int32_t> dists,
                          std::span<std::int32_t> out) {
    const std::size_t nc = out.size();
    const std::size_t deg = colors.size();
    std::size_t i = 0;

    const int32_t lane_idx[4] = {0, 1, 2, 3};
    const int32x4_t ramp = vld1q_s32(lane_idx);

    for (; i + 4 <= nc; i += 4) {
        const int32x4_t cand = vaddq_s32(vdupq_n_s32(static_cast<int32_t>(i) + 1), ramp);
        int32x4_t acc = vdupq_n_s32(0);
        for (std::size_t j = 0; j < deg; ++j) {
            const int32x4_t cj = vdupq_n_s32(colors[j]);
            const int32x4_t dj = vdupq_n_s32(dists[j]);
            const int32x4_t gap = vsubq_s32(dj, vabdq_s32(cand, cj));
            acc = vaddq_s32(acc, vmaxq_s32(gap, vdupq_n_s32(0)));
        }
        vst1q_s32(out.data() + i, acc);
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

std::int64_t edge_penalty_neon(std::span<const std::int32_t> u,
                               std::span<const std::int32_t> v,
                               std::span<const std::int32_t> dist,
                               std::span<const std::int32_t> colors) {
    const std::size_t m = u.size();
    std::size_t e = 0;
    int64x2_t acc = vdupq_n_s64(0);

    // No integer gather on NEON; load colors by lane.
    for (; e + 4 <= m; e += 4) {
        int32_t cu_l[4], cv_l[4];
        for (int k = 0; k < 4; ++k) {
            cu_l[k] = colors[u[e + k]];
            cv_l[k] = colors[v[e + k]];
        }
        const int32x4_t cu = vld1q_s32(cu_l);
        const int32x4_t cv = vld1q_s32(cv_l);
        const int32x4_t d = vld1q_s32(dist.data() + e);
        const int32x4_t gap = vsubq_s32(d, vabdq_s32(cu, cv));
        const int32x4_t pen = vmaxq_s32(gap, vdupq_n_s32(0));
        acc = vaddq_s64(acc, vaddl_s32(vget_low_s32(pen), vget_high_s32(pen)));
    }

    std::int64_t total = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
    for (; e < m; ++e) {
        const std::int32_t delta = colors[u[e]] - colors[v[e]];
        const std::int32_t gap = dist[e] - (delta < 0 ? -delta : delta);
        if (gap > 0) total += gap;
    }
    return total;
}

}  // namespace bandcol::kernels

#endif  // aarch64
