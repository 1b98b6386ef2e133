#include "gbm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbm {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("node count must be non-negative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return deg_sum / 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    std::size_t m = 0;
    for (const auto& nb : adj_) m = std::max(m, nb.size());
    return static_cast<int>(m);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // DFS visits seeds in ascending order, so components already come out
    // ordered by smallest member.
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return connected_components(g.adjacency());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
    std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int v : g.neighbors(nodes[i])) {
            int lv = local[static_cast<std::size_t>(v)];
            if (lv > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), lv);
        }
    }
    return Graph::from_edges(static_cast<int>(nodes.size()), edges);
}

} // namespace gbm
