#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

// Per-edge triangle counts T^{uv} = |{z : z ~ u and z ~ v}|, keyed by the
// graph's edge list (u < v, lexicographic).
struct TriangleCounts {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> counts;

    int at(int u, int v) const;          // throws if (u,v) is not an edge
    long long total() const;             // sum over edges; equals 3 * #triangles
};

TriangleCounts triangle_counts(const Graph& g);

// Removes every edge with T <= threshold (inclusive). Counts must have been
// computed on `g`; the input graph is left untouched.
Graph prune_threshold(const Graph& g, const TriangleCounts& counts, double threshold);

// Removes edges with lower <= T <= upper (both inclusive).
Graph prune_interval(const Graph& g, const TriangleCounts& counts, double lower, double upper);

} // namespace gbm
