#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "gbm/gbm_model.hpp"
#include "gbm/graph.hpp"
#include "gbm/rng.hpp"
#include "gbm/triangles.hpp"

using namespace gbm;

namespace {

Graph k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph cycle5() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// O(n^3) oracle: enumerate all node triples
TriangleCounts brute_counts(const Graph& g) {
    TriangleCounts tc;
    tc.edges = g.edges();
    tc.counts.assign(tc.edges.size(), 0);
    const int n = g.node_count();
    for (std::size_t i = 0; i < tc.edges.size(); ++i) {
        auto [u, v] = tc.edges[i];
        for (int z = 0; z < n; ++z)
            if (z != u && z != v && g.has_edge(u, z) && g.has_edge(v, z)) ++tc.counts[i];
    }
    return tc;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("triangle counts on K4 and the 5-cycle") {
    auto tc = triangle_counts(k4());
    for (int c : tc.counts) CHECK(c == 2);
    CHECK(tc.at(0, 3) == 2);
    CHECK(tc.at(3, 0) == 2);
    CHECK_THROWS_AS(tc.at(0, 0), std::invalid_argument);

    auto tz = triangle_counts(cycle5());
    for (int c : tz.counts) CHECK(c == 0);
}

TEST_CASE("triangle counts match the brute-force triple enumeration") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        int n = 10 + static_cast<int>(seed % 31);  // up to 40
        Graph g = random_gnp(n, 0.3, 7000 + seed);
        auto fast = triangle_counts(g);
        auto slow = brute_counts(g);
        CHECK(fast.edges == slow.edges);
        CHECK(fast.counts == slow.counts);
    }
}

TEST_CASE("count invariants: degree cap and triangle sum") {
    Graph g = random_gnp(30, 0.3, 99);
    auto tc = triangle_counts(g);
    for (std::size_t i = 0; i < tc.edges.size(); ++i) {
        auto [u, v] = tc.edges[i];
        CHECK(tc.counts[i] <= std::min(g.degree(u), g.degree(v)) - 1);
    }
    // sum over edges equals 3 * number of triangles
    long long tri = 0;
    for (int a = 0; a < g.node_count(); ++a)
        for (int b = a + 1; b < g.node_count(); ++b)
            for (int c = b + 1; c < g.node_count(); ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++tri;
    CHECK(tc.total() == 3 * tri);
}

TEST_CASE("prune_threshold inclusive comparison") {
    Graph g = k4();
    auto tc = triangle_counts(g);
    CHECK(prune_threshold(g, tc, 2.0).edge_count() == 0);
    CHECK(prune_threshold(g, tc, 1.0).edge_count() == 6);
    CHECK(prune_threshold(g, tc, 1.999).edge_count() == 6);
    CHECK(g.edge_count() == 6);  // input untouched

    Graph c5 = cycle5();
    auto tz = triangle_counts(c5);
    CHECK(prune_threshold(c5, tz, 0.0).edge_count() == 0);
}

TEST_CASE("prune_threshold is monotone in the threshold and idempotent") {
    Graph g = random_gnp(40, 0.25, 5);
    auto tc = triangle_counts(g);
    std::size_t prev = g.edge_count();
    for (double thr : {-1.0, 0.0, 1.0, 2.0, 3.5, 10.0}) {
        Graph pruned = prune_threshold(g, tc, thr);
        CHECK(pruned.edge_count() <= prev);
        // pruned edges form a subset of the original edge set
        for (auto [u, v] : pruned.edges()) CHECK(g.has_edge(u, v));
        prev = pruned.edge_count();
    }
    Graph once = prune_threshold(g, tc, 2.0);
    // re-applying the same cut to already-surviving edges removes nothing
    for (auto [u, v] : once.edges()) CHECK(tc.at(u, v) > 2.0);
}

TEST_CASE("prune_interval inclusive bounds") {
    Graph g = k4();
    auto tc = triangle_counts(g);
    CHECK(prune_interval(g, tc, 3.0, 5.0).edge_count() == 6);
    CHECK(prune_interval(g, tc, 2.0, 2.0).edge_count() == 0);
    CHECK(prune_interval(g, tc, 0.0, 1.0).edge_count() == 6);
    CHECK_THROWS_AS(prune_interval(g, tc, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("counts computed on one graph are rejected on another") {
    auto tc = triangle_counts(k4());
    CHECK_THROWS_AS(prune_threshold(cycle5(), tc, 1.0), std::invalid_argument);
}

TEST_CASE("cross-edge counts concentrate on the two-binomial mean") {
    // mean T over cross edges within 5% of (n-2)*2*theta2*log(n)/n at n = 800
    const int n = 800;
    const double th2 = 2.0;
    const double target = (n - 2) * 2.0 * th2 * std::log(n) / n;
    double sum = 0.0;
    long long cnt = 0;
    for (int s = 0; s < 10; ++s) {
        auto lg = sample_gbm({n, 10.0, th2, 31000ULL + static_cast<std::uint64_t>(s)});
        auto tc = triangle_counts(lg.graph);
        for (std::size_t i = 0; i < tc.edges.size(); ++i) {
            auto [u, v] = tc.edges[i];
            if (lg.sigma[static_cast<std::size_t>(u)] != lg.sigma[static_cast<std::size_t>(v)]) {
                sum += tc.counts[i];
                ++cnt;
            }
        }
    }
    CHECK(std::fabs(sum / static_cast<double>(cnt) - target) / target < 0.05);
}
