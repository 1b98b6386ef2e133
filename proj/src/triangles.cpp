#include "gbm/triangles.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbm {

int TriangleCounts::at(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("triangle count queried for a non-edge");
    return counts[static_cast<std::size_t>(it - edges.begin())];
}

long long TriangleCounts::total() const {
    long long s = 0;
    for (int c : counts) s += c;
    return s;
}

TriangleCounts triangle_counts(const Graph& g) {
    TriangleCounts tc;
    tc.edges = g.edges();
    tc.counts.resize(tc.edges.size());
    for (std::size_t i = 0; i < tc.edges.size(); ++i) {
        auto [u, v] = tc.edges[i];
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        // merge-intersection of the two sorted lists
        int cnt = 0;
        std::size_t p = 0, q = 0;
        while (p < a.size() && q < b.size()) {
            if (a[p] < b[q]) ++p;
            else if (a[p] > b[q]) ++q;
            else { ++cnt; ++p; ++q; }
        }
        tc.counts[i] = cnt;
    }
    return tc;
}

namespace {

template <typename Remove>
Graph prune_if(const Graph& g, const TriangleCounts& counts, Remove remove) {
    if (counts.edges.size() != g.edge_count())
        throw std::invalid_argument("counts were not computed on this graph");
    std::vector<std::pair<int, int>> kept;
    kept.reserve(counts.edges.size());
    for (std::size_t i = 0; i < counts.edges.size(); ++i)
        if (!remove(counts.counts[i])) kept.push_back(counts.edges[i]);
    return Graph::from_edges(g.node_count(), kept);
}

} // namespace

Graph prune_threshold(const Graph& g, const TriangleCounts& counts, double threshold) {
    return prune_if(g, counts, [&](int c) { return static_cast<double>(c) <= threshold; });
}

Graph prune_interval(const Graph& g, const TriangleCounts& counts, double lower, double upper) {
    if (lower > upper) throw std::invalid_argument("prune interval: lower > upper");
    return prune_if(g, counts, [&](int c) {
        double x = static_cast<double>(c);
        return lower <= x && x <= upper;
    });
}

} // namespace gbm
