#include "bandcol/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "bandcol/vns.hpp"

namespace bandcol {

namespace {

struct Backtracker {
    const WeightedGraph& g;
    std::vector<Vertex> order;                   // assignment order, high degree first
    std::vector<std::vector<std::pair<Vertex, std::int32_t>>> earlier;  // per order position
    std::vector<Color> assigned;                 // by vertex id, 0 = unset
    Color span;

    explicit Backtracker(const WeightedGraph& graph) : g(graph) {
        order.resize(g.num_vertices());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        std::vector<std::int32_t> pos(g.num_vertices());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::int32_t>(i);
        earlier.resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            const auto ids = g.neighbor_ids(v);
            const auto dists = g.neighbor_dists(v);
            for (std::size_t j = 0; j < ids.size(); ++j)
                if (pos[ids[j]] < static_cast<std::int32_t>(i))
                    earlier[i].emplace_back(ids[j], dists[j]);
        }
        assigned.assign(g.num_vertices(), 0);
    }

    bool fill(std::size_t i) {
        if (i == order.size()) return true;
        const Vertex v = order[i];
        // Colorings map to feasible colorings under c -> span+1-c, so the
        // first vertex only needs the lower half of the range.
        const Color limit = i == 0 ? (span + 1) / 2 : span;
        for (Color c = 1; c <= limit; ++c) {
            bool ok = true;
            for (const auto& [u, d] : earlier[i]) {
                if (std::abs(c - assigned[u]) < d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned[v] = c;
            if (fill(i + 1)) return true;
        }
        assigned[v] = 0;
        return false;
    }
};

}  // namespace

std::optional<Coloring> exact_min_span_coloring(const WeightedGraph& g, Color max_span,
                                                Vertex max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw std::invalid_argument("instance too large for exhaustive search (" +
                                    std::to_string(g.num_vertices()) + " > " +
                                    std::to_string(max_vertices) + " vertices)");
    Backtracker bt(g);
    for (Color span = trivial_lower_bound(g); span <= max_span; ++span) {
        bt.span = span;
        if (bt.fill(0)) return Coloring(bt.assigned);
    }
    return std::nullopt;
}

std::optional<Color> exact_min_span(const WeightedGraph& g, Color max_span, Vertex max_vertices) {
    auto coloring = exact_min_span_coloring(g, max_span, max_vertices);
    if (!coloring) return std::nullopt;
    return *std::max_element(coloring->begin(), coloring->end());
}

}  // namespace bandcol
