#include "bandcol/search_state.hpp"

#include <cassert>
#include <cstdlib>

#include "bandcol/kernels.hpp"

namespace bandcol {

SearchState::SearchState(const WeightedGraph& g, Coloring coloring, Color nc)
    : g_(&g), col_(std::move(coloring)), nc_(nc) {
    if (col_.size() != static_cast<std::size_t>(g.num_vertices()))
        throw std::invalid_argument("coloring length does not match vertex count");
    if (nc_ < 1) throw std::invalid_argument("nc must be >= 1");
    for (Color c : col_)
        if (c < 1 || c > nc_) throw std::invalid_argument("color outside [1, nc]");

    conflict_.assign(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto ids = g.neighbor_ids(v);
        const auto dists = g.neighbor_dists(v);
        std::int32_t sum = 0;
        for (std::size_t j = 0; j < ids.size(); ++j) {
            const std::int32_t gap = dists[j] - std::abs(col_[v] - col_[ids[j]]);
            if (gap > 0) sum += gap;
        }
        conflict_[v] = sum;
        penalty_ += sum;
    }
    assert(penalty_ % 2 == 0);
    penalty_ /= 2;

    nbr_colors_.reserve(g.max_degree());
}

void SearchState::check_color(Color c) const {
    if (c < 1 || c > nc_)
        throw std::invalid_argument("color " + std::to_string(c) + " outside [1, " +
                                    std::to_string(nc_) + "]");
}

std::int64_t SearchState::recolor_delta(Vertex v, Color c) const {
    if (v < 0 || v >= g_->num_vertices())
        throw std::invalid_argument("vertex out of range: " + std::to_string(v + 1));
    check_color(c);
    const Color old = col_[v];
    if (c == old) return 0;
    const auto ids = g_->neighbor_ids(v);
    const auto dists = g_->neighbor_dists(v);
    std::int64_t delta = 0;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        const Color cj = col_[ids[j]];
        const std::int32_t d = dists[j];
        const std::int32_t before = d - std::abs(old - cj);
        const std::int32_t after = d - std::abs(c - cj);
        delta += (after > 0 ? after : 0) - (before > 0 ? before : 0);
    }
    return delta;
}

void SearchState::apply_recolor(Vertex v, Color c) {
    if (v < 0 || v >= g_->num_vertices())
        throw std::invalid_argument("vertex out of range: " + std::to_string(v + 1));
    check_color(c);
    const Color old = col_[v];
    if (c == old) return;
    const auto ids = g_->neighbor_ids(v);
    const auto dists = g_->neighbor_dists(v);
    std::int64_t sum_after = 0;
    std::int64_t delta = 0;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        const Vertex u = ids[j];
        const Color cj = col_[u];
        const std::int32_t d = dists[j];
        std::int32_t before = d - std::abs(old - cj);
        std::int32_t after = d - std::abs(c - cj);
        before = before > 0 ? before : 0;
        after = after > 0 ? after : 0;
        conflict_[u] += after - before;
        sum_after += after;
        delta += after - before;
    }
    conflict_[v] = static_cast<std::int32_t>(sum_after);
    penalty_ += delta;
    col_[v] = c;
}

SearchState::BestMove SearchState::best_recoloring(Vertex v) {
    const auto ids = g_->neighbor_ids(v);
    const auto dists = g_->neighbor_dists(v);
    nbr_colors_.resize(ids.size());
    for (std::size_t j = 0; j < ids.size(); ++j) nbr_colors_[j] = col_[ids[j]];

    profile_.resize(nc_);
    kernels::active().penalty_profile(nbr_colors_, dists, profile_);

    // The incumbent color is one of the candidates, so the best delta is
    // never positive.
    assert(profile_[col_[v] - 1] == conflict_[v]);
    std::size_t best = 0;
    for (std::size_t i = 1; i < profile_.size(); ++i)
        if (profile_[i] < profile_[best]) best = i;
    return {static_cast<Color>(best) + 1,
            static_cast<std::int64_t>(profile_[best]) - conflict_[v]};
}

void SearchState::set_nc(Color nc) {
    if (nc < 1) throw std::invalid_argument("nc must be >= 1");
    for (Color c : col_)
        if (c > nc) throw std::invalid_argument("a used color exceeds the new nc");
    nc_ = nc;
}

}  // namespace bandcol
