#include "bandcol/coloring.hpp"

#include <algorithm>
#include <cstdlib>

#include "bandcol/kernels.hpp"

namespace bandcol {

std::int64_t evaluate(const WeightedGraph& g, const Coloring& coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("coloring length does not match vertex count");
    return kernels::active().edge_penalty(g.edge_u(), g.edge_v(), g.edge_dist(), coloring);
}

std::int64_t vertex_conflicts(const WeightedGraph& g, const Coloring& coloring, Vertex v) {
    if (coloring.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("coloring length does not match vertex count");
    if (v < 0 || v >= g.num_vertices())
        throw std::invalid_argument("vertex out of range: " + std::to_string(v + 1));
    const auto ids = g.neighbor_ids(v);
    const auto dists = g.neighbor_dists(v);
    const Color cv = coloring[v];
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        const std::int32_t gap = dists[j] - std::abs(cv - coloring[ids[j]]);
        if (gap > 0) sum += gap;
    }
    return sum;
}

bool is_feasible(const WeightedGraph& g, const Coloring& coloring) {
    return evaluate(g, coloring) == 0;
}

Color max_color(const Coloring& coloring) {
    if (coloring.empty()) throw std::invalid_argument("empty coloring");
    return *std::max_element(coloring.begin(), coloring.end());
}

}  // namespace bandcol
