#include "bandcol/graph.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace bandcol {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

}  // namespace

WeightedGraph::WeightedGraph(Vertex n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    build(std::move(edges));
}

WeightedGraph::WeightedGraph(Vertex n, std::vector<Edge> edges,
                             std::vector<std::int32_t> multiplicity,
                             std::vector<std::int32_t> loop_dist)
    : WeightedGraph(n, std::move(edges)) {
    if (multiplicity.size() != static_cast<std::size_t>(n) ||
        loop_dist.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("multiplicity and loop distance arrays must cover every vertex");
    for (Vertex v = 0; v < n; ++v) {
        if (multiplicity[v] < 1)
            throw std::invalid_argument("vertex multiplicity must be >= 1 (vertex " +
                                        std::to_string(v + 1) + ")");
        if (loop_dist[v] < 1)
            throw std::invalid_argument("loop distance must be >= 1 (vertex " +
                                        std::to_string(v + 1) + ")");
    }
    multiplicity_ = std::move(multiplicity);
    loop_dist_ = std::move(loop_dist);
}

void WeightedGraph::build(std::vector<Edge> edges) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u + 1) +
                                        "," + std::to_string(e.v + 1) + ")");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u + 1));
        if (e.dist < 1)
            throw std::invalid_argument("edge distance must be >= 1 on (" + std::to_string(e.u + 1) +
                                        "," + std::to_string(e.v + 1) + ")");
        if (!seen.insert(edge_key(e.u, e.v)).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u + 1) + "," +
                                        std::to_string(e.v + 1) + ")");
    }

    edge_u_.reserve(edges.size());
    edge_v_.reserve(edges.size());
    edge_d_.reserve(edges.size());
    std::vector<std::int32_t> deg(n_, 0);
    for (const Edge& e : edges) {
        edge_u_.push_back(e.u);
        edge_v_.push_back(e.v);
        edge_d_.push_back(e.dist);
        ++deg[e.u];
        ++deg[e.v];
        max_dist_ = std::max(max_dist_, e.dist);
    }

    adj_off_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) adj_off_[v + 1] = adj_off_[v] + deg[v];
    nbr_id_.resize(adj_off_[n_]);
    nbr_dist_.resize(adj_off_[n_]);
    std::vector<std::int64_t> fill(adj_off_.begin(), adj_off_.end() - 1);
    for (const Edge& e : edges) {
        nbr_id_[fill[e.u]] = e.v;
        nbr_dist_[fill[e.u]++] = e.dist;
        nbr_id_[fill[e.v]] = e.u;
        nbr_dist_[fill[e.v]++] = e.dist;
    }

    weight_sum_.assign(n_, 0);
    max_incident_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
        std::int64_t sum = 0;
        std::int32_t mx = 0;
        for (std::int32_t d : neighbor_dists(v)) {
            sum += d;
            mx = std::max(mx, d);
        }
        // The candidate-color penalty of a vertex is bounded by this sum, so
        // keeping it in 32 bits keeps every kernel lane in 32 bits.
        if (sum > std::numeric_limits<std::int32_t>::max())
            throw std::invalid_argument("incident distance sum overflows 32 bits at vertex " +
                                        std::to_string(v + 1));
        weight_sum_[v] = static_cast<std::int32_t>(sum);
        max_incident_[v] = mx;
        max_degree_ = std::max(max_degree_, deg[v]);
    }
}

}  // namespace bandcol
