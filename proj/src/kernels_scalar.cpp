#include <cstdlib>

#include "bandcol/kernels.hpp"

namespace bandcol::kernels {

// Reference kernels. Kept deliberately plain: every SIMD variant is tested
// against these loops, so they define the semantics.

void penalty_profile_scalar(std::span<const std::int32_t> colors,
                            std::span<const std::int32_t> dists,
                            std::span<std::int32_t> out) {
    for (std::int32_t& x : out) x = 0;
    const std::size_t deg = colors.size();
    for (std::size_t j = 0; j < deg; ++j) {
        const std::int32_t cj = colors[j];
        const std::int32_t dj = dists[j];
        for (std::size_t i = 0; i < out.size(); ++i) {
            const std::int32_t cand = static_cast<std::int32_t>(i) + 1;
            const std::int32_t gap = dj - std::abs(cand - cj);
            if (gap > 0) out[i] += gap;
        }
    }
}

std::int64_t edge_penalty_scalar(std::span<const std::int32_t> u,
                                 std::span<const std::int32_t> v,
                                 std::span<const std::int32_t> dist,
                                 std::span<const std::int32_t> colors) {
    std::int64_t total = 0;
    for (std::size_t e = 0; e < u.size(); ++e) {
        const std::int32_t gap = dist[e] - std::abs(colors[u[e]] - colors[v[e]]);
        if (gap > 0) total += gap;
    }
    return total;
}

}  // namespace bandcol::kernels
