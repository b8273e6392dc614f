#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "bandcol/graph.hpp"
#include "bandcol/greedy.hpp"
#include "bandcol/rng.hpp"
#include "bandcol/search_state.hpp"
#include "bandcol/types.hpp"

namespace bandcol {

using Clock = std::chrono::steady_clock;

struct SolverConfig {
    int k_min = 2;
    int k_max = 20;
    double time_limit = 60.0;     // seconds; <= 0 disables the wall clock
    std::uint64_t max_iters = 0;  // outer shake/descent cycles; 0 = no cap
    double p_move = 0.5;          // acceptance probability on equal objectives
    std::array<bool, 3> criteria{true, true, true};  // conflict / mid-distance / geometric-mean
    std::uint64_t seed = 1;
    GreedyOrder greedy_order = GreedyOrder::kVertexId;
    Color start_k = 0;   // > 0: start from this many colors instead of UB-1
    Color target_k = 0;  // > 0: stop once a feasible coloring with this span is found
    bool record_trace = false;

    // Test hook: observes the neighborhood size of every outer iteration.
    std::function<void(int)> on_iteration;

    void validate() const;
};

struct TracePoint {
    double seconds;
    std::uint64_t iteration;
    Color k_star;
};

struct RunResult {
    Color k_star = 0;
    Coloring best_coloring;
    double seconds_to_best = 0.0;
    std::uint64_t iters_to_best = 0;
    std::uint64_t iterations = 0;
    double total_seconds = 0.0;
    std::vector<TracePoint> trace;
};

// Called with every new best feasible coloring and its span.
using FeasibilitySink = std::function<void(const Coloring&, Color)>;

// Random coloring over [1, ub-1], the starting point of the search.  With
// ub < 2 there is nothing to randomize and all vertices get color 1.
Coloring init_solution(Vertex n, Color ub, Rng& rng);

// Perturbs min(k, n) distinct vertices, each to a color in [1, nc] different
// from its current one, so the result is at Hamming distance exactly
// min(k, n) from x.  Requires nc >= 2.
Coloring shake(const Coloring& x, std::int32_t k, Color nc, Rng& rng);

// Vertex examination order of the descent.  Enabled criteria apply
// lexicographically: most conflicts first, then colors nearest to the middle
// of [1, nc], then largest geometric mean of incident distance sum and
// maximum incident distance; vertex id breaks remaining ties.
std::vector<Vertex> order_vertices(const SearchState& state, const std::array<bool, 3>& criteria);

// Acceptance rule between a descent result and the incumbent: fewer allowed
// colors wins, then lower penalty; equal objectives move with probability
// p_move.
bool compare(const SearchState& candidate, const SearchState& incumbent, double p_move, Rng& rng);

// Variable neighborhood descent.  Repeatedly re-sorts the vertices and
// best-recolors each one, adopting strict improvements.  Whenever the
// penalty reaches zero the coloring is reported to the sink, the color
// budget drops below the span just found, and every vertex left out of range
// is re-randomized.  Returns when a full pass finds no improvement or the
// deadline expires.
void vnd(SearchState& state, Clock::time_point deadline, const std::array<bool, 3>& criteria,
         Rng& rng, const FeasibilitySink& sink);

// Smallest span any feasible coloring can have: longest edge distance + 1,
// or 1 on an edgeless graph.
Color trivial_lower_bound(const WeightedGraph& g);

// Full search: greedy upper bound, random init one color below it, then
// shake/descent cycles over neighborhood sizes k_min..k_max until the time
// or iteration budget runs out.
RunResult solve(const WeightedGraph& g, const SolverConfig& config);

}  // namespace bandcol
