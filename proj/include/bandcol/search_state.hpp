#pragma once

#include <vector>

#include "bandcol/coloring.hpp"
#include "bandcol/graph.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

// A coloring under search, with the bookkeeping that makes single-vertex
// recolorings O(degree): per-vertex conflict values, the total penalty, and
// the number of colors currently allowed (nc).
//
// Invariants, maintained by every mutation:
//   * total_penalty() == evaluate(graph, coloring())        (exact integers)
//   * conflicts_of(v) == vertex_conflicts(graph, coloring(), v) for all v
//   * sum_v conflicts_of(v) == 2 * total_penalty()
//   * 1 <= coloring()[v] <= nc() for all v
//
// Single-owner mutable state: one search thread owns one SearchState. The
// underlying graph is shared and immutable.
class SearchState {
public:
    SearchState(const WeightedGraph& g, Coloring coloring, Color nc);

    const WeightedGraph& graph() const { return *g_; }
    const Coloring& coloring() const { return col_; }
    Color color_of(Vertex v) const { return col_[v]; }
    std::int64_t total_penalty() const { return penalty_; }
    std::int32_t conflicts_of(Vertex v) const { return conflict_[v]; }
    Color nc() const { return nc_; }

    // Penalty change if v were recolored to c, without applying it.
    std::int64_t recolor_delta(Vertex v, Color c) const;

    // Recolors v and updates the caches of v and its neighbors.
    void apply_recolor(Vertex v, Color c);

    struct BestMove {
        Color color;
        std::int64_t delta;  // <= 0: the incumbent color is among the candidates
    };

    // Scans all candidate colors 1..nc() and returns the one with the lowest
    // resulting penalty, smallest color on ties.  Backed by the active
    // penalty_profile kernel.
    BestMove best_recoloring(Vertex v);

    // Lowers (or raises) the number of allowed colors.  Requires that every
    // current color already lies in [1, nc].
    void set_nc(Color nc);

private:
    void check_color(Color c) const;

    const WeightedGraph* g_;
    Coloring col_;
    std::vector<std::int32_t> conflict_;
    std::int64_t penalty_ = 0;
    Color nc_;

    std::vector<std::int32_t> nbr_colors_;  // scratch for best_recoloring
    std::vector<std::int32_t> profile_;     // scratch: penalty per candidate color
};

}  // namespace bandcol
