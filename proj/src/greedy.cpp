#include "bandcol/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace bandcol {

Coloring greedy_ub(const WeightedGraph& g, std::span<const Vertex> order) {
    const Vertex n = g.num_vertices();
    if (order.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("order must be a permutation of all vertices");
    std::vector<bool> seen(n, false);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order must be a permutation of all vertices");
        seen[v] = true;
    }

    Coloring colors(n, 0);  // 0 = not yet colored
    // Forbidden colors of a vertex form intervals [c(j)-d+1, c(j)+d-1] around
    // each colored neighbor; the smallest admissible color is found by a
    // sweep over the intervals sorted by start.
    std::vector<std::pair<Color, Color>> forbidden;
    for (Vertex v : order) {
        forbidden.clear();
        const auto ids = g.neighbor_ids(v);
        const auto dists = g.neighbor_dists(v);
        for (std::size_t j = 0; j < ids.size(); ++j) {
            const Color cj = colors[ids[j]];
            if (cj == 0) continue;
            const std::int32_t d = dists[j];
            forbidden.emplace_back(cj - d + 1, cj + d - 1);
        }
        std::sort(forbidden.begin(), forbidden.end());
        Color candidate = 1;
        for (const auto& [lo, hi] : forbidden) {
            if (candidate < lo) break;
            if (candidate <= hi) candidate = hi + 1;
        }
        colors[v] = candidate;
    }
    return colors;
}

Coloring greedy_ub(const WeightedGraph& g, GreedyOrder order) {
    std::vector<Vertex> seq(g.num_vertices());
    std::iota(seq.begin(), seq.end(), 0);
    if (order == GreedyOrder::kWeightSumDesc) {
        std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
            if (g.weight_sum(a) != g.weight_sum(b)) return g.weight_sum(a) > g.weight_sum(b);
            return a < b;
        });
    }
    return greedy_ub(g, seq);
}

}  // namespace bandcol
