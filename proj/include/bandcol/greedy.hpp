#pragma once

#include <span>

#include "bandcol/graph.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

enum class GreedyOrder {
    kVertexId,       // ascending vertex id (default)
    kWeightSumDesc,  // descending incident distance sum, id on ties
};

// Sequential greedy coloring: vertices are colored in the given order, each
// receiving the smallest positive color whose distance to every
// already-colored neighbor satisfies the edge constraint.  The result is
// always feasible and its span is the upper bound that seeds the solver.
Coloring greedy_ub(const WeightedGraph& g, std::span<const Vertex> order);

Coloring greedy_ub(const WeightedGraph& g, GreedyOrder order = GreedyOrder::kVertexId);

}  // namespace bandcol
