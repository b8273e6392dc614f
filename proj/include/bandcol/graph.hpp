#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bandcol/types.hpp"

namespace bandcol {

struct Neighbor {
    Vertex v;
    std::int32_t dist;
};

// Undirected graph with positive integer edge distances.  Immutable after
// construction; adjacency is stored as CSR so the per-vertex neighbor scan
// of the incremental evaluation touches contiguous memory.
//
// For multicoloring instances the per-vertex color demand w(v) and the
// self-distance d(v,v) ride along; both are present together or not at all.
// The edge set itself never contains self-loops.
class WeightedGraph {
public:
    WeightedGraph(Vertex n, std::vector<Edge> edges);
    WeightedGraph(Vertex n, std::vector<Edge> edges,
                  std::vector<std::int32_t> multiplicity,
                  std::vector<std::int32_t> loop_dist);

    Vertex num_vertices() const { return n_; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(edge_u_.size()); }

    std::span<const Vertex> neighbor_ids(Vertex v) const {
        return {nbr_id_.data() + adj_off_[v], static_cast<std::size_t>(adj_off_[v + 1] - adj_off_[v])};
    }
    std::span<const std::int32_t> neighbor_dists(Vertex v) const {
        return {nbr_dist_.data() + adj_off_[v], static_cast<std::size_t>(adj_off_[v + 1] - adj_off_[v])};
    }
    std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(adj_off_[v + 1] - adj_off_[v]); }
    std::int32_t max_degree() const { return max_degree_; }

    // Edge list in struct-of-arrays form, as consumed by the penalty kernels.
    std::span<const Vertex> edge_u() const { return edge_u_; }
    std::span<const Vertex> edge_v() const { return edge_v_; }
    std::span<const std::int32_t> edge_dist() const { return edge_d_; }

    // Sum of distances of edges incident to v and the largest such distance.
    // These feed the third VND ordering criterion and never change.
    std::int32_t weight_sum(Vertex v) const { return weight_sum_[v]; }
    std::int32_t max_incident(Vertex v) const { return max_incident_[v]; }

    // Largest edge distance in the graph; any feasible coloring spans at
    // least max_dist()+1 colors when an edge exists.
    std::int32_t max_dist() const { return max_dist_; }

    bool is_multicolor() const { return !multiplicity_.empty(); }
    std::int32_t multiplicity(Vertex v) const { return multiplicity_[v]; }
    std::int32_t loop_dist(Vertex v) const { return loop_dist_[v]; }
    const std::vector<std::int32_t>& multiplicities() const { return multiplicity_; }

private:
    void build(std::vector<Edge> edges);

    Vertex n_ = 0;
    std::vector<std::int64_t> adj_off_;
    std::vector<Vertex> nbr_id_;
    std::vector<std::int32_t> nbr_dist_;
    std::vector<Vertex> edge_u_, edge_v_;
    std::vector<std::int32_t> edge_d_;
    std::vector<std::int32_t> weight_sum_;
    std::vector<std::int32_t> max_incident_;
    std::int32_t max_dist_ = 0;
    std::int32_t max_degree_ = 0;
    std::vector<std::int32_t> multiplicity_;
    std::vector<std::int32_t> loop_dist_;
};

}  // namespace bandcol
