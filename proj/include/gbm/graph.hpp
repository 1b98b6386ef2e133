#pragma once
#include <cstddef>
#include <utility>
#include <vector>

namespace gbm {

// Undirected simple graph; neighbor lists kept sorted ascending.
// Immutable after construction, safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    // Builds from an undirected edge list. Self-loops are rejected,
    // duplicate edges collapse to one.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

// Maximal connected components; each component's node list ascending,
// components ordered by smallest member id.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> connected_components(const std::vector<std::vector<int>>& adj);

// Subgraph induced on `nodes` (ascending, duplicate-free); local ids follow
// the position in `nodes`.
Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes);

} // namespace gbm
