#include "bandcol/vns.hpp"

#include <algorithm>
#include <cassert>

#include "bandcol/coloring.hpp"

namespace bandcol {

void SolverConfig::validate() const {
    if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
    if (k_max < k_min) throw std::invalid_argument("k_max must be >= k_min");
    if (p_move < 0.0 || p_move > 1.0) throw std::invalid_argument("p_move must be in [0, 1]");
    if (start_k < 0 || target_k < 0) throw std::invalid_argument("negative color bound");
}

Coloring init_solution(Vertex n, Color ub, Rng& rng) {
    Coloring colors(n);
    const Color hi = std::max<Color>(1, ub - 1);
    for (Color& c : colors) c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(hi)));
    return colors;
}

namespace {

// New color for v: uniform over [1, nc] minus the current color.
Color draw_different_color(Color current, Color nc, Rng& rng) {
    if (current < 1 || current > nc) return static_cast<Color>(1 + rng.below(nc));
    Color c = static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(nc - 1)));
    if (c >= current) ++c;
    return c;
}

}  // namespace

Coloring shake(const Coloring& x, std::int32_t k, Color nc, Rng& rng) {
    if (k < 1) throw std::invalid_argument("shake needs k >= 1");
    if (nc < 2) throw std::invalid_argument("shake needs nc >= 2 to change a color");
    const auto n = static_cast<std::int32_t>(x.size());
    k = std::min(k, n);
    DistinctSampler sampler(n);
    std::vector<std::int32_t> chosen;
    sampler.sample(k, rng, chosen);
    Coloring out = x;
    for (Vertex v : chosen) out[v] = draw_different_color(x[v], nc, rng);
    return out;
}

std::vector<Vertex> order_vertices(const SearchState& state, const std::array<bool, 3>& criteria) {
    const WeightedGraph& g = state.graph();
    std::vector<Vertex> order(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) order[v] = v;
    if (!criteria[0] && !criteria[1] && !criteria[2]) return order;

    const Color nc = state.nc();
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (criteria[0] && state.conflicts_of(a) != state.conflicts_of(b))
            return state.conflicts_of(a) > state.conflicts_of(b);
        if (criteria[1]) {
            // distance of the color from the middle of [1, nc], kept in
            // integers by comparing |nc - 2c| instead of |nc/2 - c|
            const std::int64_t da = std::abs(std::int64_t{nc} - 2 * std::int64_t{state.color_of(a)});
            const std::int64_t db = std::abs(std::int64_t{nc} - 2 * std::int64_t{state.color_of(b)});
            if (da != db) return da < db;
        }
        if (criteria[2]) {
            // geometric mean of incident distance sum and max incident
            // distance, compared through the squared keys
            const std::int64_t pa = std::int64_t{g.weight_sum(a)} * g.max_incident(a);
            const std::int64_t pb = std::int64_t{g.weight_sum(b)} * g.max_incident(b);
            if (pa != pb) return pa > pb;
        }
        return a < b;
    });
    return order;
}

bool compare(const SearchState& candidate, const SearchState& incumbent, double p_move, Rng& rng) {
    if (candidate.nc() != incumbent.nc()) return candidate.nc() < incumbent.nc();
    if (candidate.total_penalty() != incumbent.total_penalty())
        return candidate.total_penalty() < incumbent.total_penalty();
    return rng.bernoulli(p_move);
}

namespace {

// Zero-penalty handling: report the feasible coloring, drop the color budget
// to one below its span, and re-randomize the vertices that no longer fit.
// Re-randomizing can leave the state feasible again, so the budget may fall
// by more than one before the descent resumes.  Returns false once span 1 is
// reached and no further reduction is possible.
bool on_feasible(SearchState& state, Rng& rng, const FeasibilitySink& sink) {
    while (state.total_penalty() == 0) {
        const Color span = max_color(state.coloring());
        if (sink) sink(state.coloring(), span);
        if (span <= 1) return false;
        const Color new_nc = span - 1;
        for (Vertex v = 0; v < state.graph().num_vertices(); ++v)
            if (state.color_of(v) > new_nc)
                state.apply_recolor(v, static_cast<Color>(1 + rng.below(new_nc)));
        state.set_nc(new_nc);
    }
    return true;
}

}  // namespace

void vnd(SearchState& state, Clock::time_point deadline, const std::array<bool, 3>& criteria,
         Rng& rng, const FeasibilitySink& sink) {
    if (state.total_penalty() == 0 && !on_feasible(state, rng, sink)) return;

    bool improved = true;
    while (improved) {
        if (Clock::now() >= deadline) return;
        improved = false;
        const std::vector<Vertex> order = order_vertices(state, criteria);
        for (Vertex v : order) {
            if (Clock::now() >= deadline) return;
            const SearchState::BestMove move = state.best_recoloring(v);
            if (move.delta >= 0) continue;
            state.apply_recolor(v, move.color);
            improved = true;
            if (state.total_penalty() == 0 && !on_feasible(state, rng, sink)) return;
        }
    }
}

Color trivial_lower_bound(const WeightedGraph& g) {
    return g.num_edges() > 0 ? g.max_dist() + 1 : 1;
}

RunResult solve(const WeightedGraph& g, const SolverConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const auto seconds_since_start = [&] {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    };

    Rng rng(config.seed);
    RunResult result;
    result.best_coloring = greedy_ub(g, config.greedy_order);
    result.k_star = max_color(result.best_coloring);
    if (config.record_trace) result.trace.push_back({0.0, 0, result.k_star});

    const Color lower_bound = trivial_lower_bound(g);
    const auto reached_goal = [&] {
        return result.k_star <= lower_bound ||
               (config.target_k > 0 && result.k_star <= config.target_k);
    };
    if (reached_goal() || (config.time_limit <= 0 && config.max_iters == 0)) {
        result.total_seconds = seconds_since_start();
        return result;
    }

    // Starting color budget: one below the greedy span, or the explicit
    // start_k when given (clamped so the initial randomization stays valid).
    Color nc0 = result.k_star - 1;
    if (config.start_k > 0) nc0 = std::min(nc0, config.start_k);
    nc0 = std::max<Color>(nc0, 2);

    SearchState incumbent(g, init_solution(g.num_vertices(), nc0 + 1, rng), nc0);

    const auto deadline =
        config.time_limit > 0
            ? t0 + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(config.time_limit))
            : Clock::time_point::max();

    std::uint64_t iteration = 0;
    const FeasibilitySink sink = [&](const Coloring& coloring, Color span) {
        if (span >= result.k_star) return;
        result.k_star = span;
        result.best_coloring = coloring;
        result.seconds_to_best = seconds_since_start();
        result.iters_to_best = iteration;
        if (config.record_trace)
            result.trace.push_back({result.seconds_to_best, iteration, span});
    };

    DistinctSampler sampler(g.num_vertices());
    std::vector<std::int32_t> shaken;

    int k = config.k_min;
    while (!reached_goal()) {
        if (config.max_iters > 0 && iteration >= config.max_iters) break;
        if (Clock::now() >= deadline) break;
        ++iteration;
        if (config.on_iteration) config.on_iteration(k);

        SearchState candidate = incumbent;
        const auto moves = std::min<std::int32_t>(k, g.num_vertices());
        sampler.sample(moves, rng, shaken);
        for (Vertex v : shaken)
            candidate.apply_recolor(v, draw_different_color(candidate.color_of(v),
                                                            candidate.nc(), rng));

        vnd(candidate, deadline, config.criteria, rng, sink);

        if (compare(candidate, incumbent, config.p_move, rng)) {
            incumbent = std::move(candidate);
        } else {
            k = k < config.k_max ? k + 1 : config.k_min;
        }
    }

    result.iterations = iteration;
    result.total_seconds = seconds_since_start();
    assert(is_feasible(g, result.best_coloring));
    assert(max_color(result.best_coloring) == result.k_star);
    return result;
}

}  // namespace bandcol
