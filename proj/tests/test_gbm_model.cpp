#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gbm/gbm_model.hpp"
#include "gbm/graph.hpp"

using namespace gbm;

namespace {

// asymptotic two-sample Kolmogorov-Smirnov p-value
double ks_two_sample_p(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        double fa = static_cast<double>(i) / static_cast<double>(a.size());
        double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::fabs(fa - fb));
    }
    double m = static_cast<double>(a.size()), n = static_cast<double>(b.size());
    double lambda = d * std::sqrt(m * n / (m + n));
    double p = 0.0;
    for (int k = 1; k <= 100; ++k)
        p += 2.0 * (k % 2 == 1 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

TEST_CASE("torus_distance basics") {
    CHECK(torus_distance(0.1, 0.9) == doctest::Approx(0.2));
    CHECK(torus_distance(0.25, 0.75) == doctest::Approx(0.5));
    CHECK(torus_distance(0.3, 0.3) == doctest::Approx(0.0));
    CHECK(torus_distance(0.9, 0.1) == doctest::Approx(0.2));  // symmetric
}

TEST_CASE("torus triangle inequality on random triples") {
    std::vector<double> xs = {0.01, 0.13, 0.37, 0.49, 0.5, 0.62, 0.77, 0.93, 0.99};
    for (double x : xs)
        for (double y : xs)
            for (double z : xs)
                CHECK(torus_distance(x, z) <= torus_distance(x, y) + torus_distance(y, z) + 1e-15);
}

TEST_CASE("sample_gbm parameter validation") {
    CHECK_THROWS_AS(sample_gbm({3, 1.0, 0.5, 1}), std::invalid_argument);       // odd n
    CHECK_THROWS_AS(sample_gbm({4, 0.5, 1.0, 1}), std::invalid_argument);       // theta1 < theta2
    CHECK_THROWS_AS(sample_gbm({4, -1.0, -2.0, 1}), std::invalid_argument);     // negative
    // degenerate radius: theta1*log(4)/4 >= 1/2
    CHECK_THROWS_AS(sample_gbm({4, 2.0, 0.0, 1}), std::invalid_argument);
}

TEST_CASE("sample_gbm zero radius gives the empty graph") {
    auto lg = sample_gbm({4, 0.0, 0.0, 42});
    CHECK(lg.graph.edge_count() == 0);
    CHECK(lg.sigma == std::vector<std::uint8_t>{1, 1, 2, 2});
}

TEST_CASE("sample_gbm label layout and balance") {
    auto lg = sample_gbm({100, 3.0, 1.0, 7});
    int c1 = 0, c2 = 0;
    for (auto l : lg.sigma) (l == 1 ? c1 : c2)++;
    CHECK(c1 == 50);
    CHECK(c2 == 50);
    for (int u = 0; u < 50; ++u) CHECK(lg.sigma[static_cast<std::size_t>(u)] == 1);
}

TEST_CASE("sample_gbm regeneration: sweep construction equals the definition") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
        auto lg = sample_gbm({300, 8.0, 2.0, seed});
        double r1 = 8.0 * std::log(300.0) / 300.0;
        double r2 = 2.0 * std::log(300.0) / 300.0;
        Graph ref = edges_from_features(lg.features, lg.sigma, r1, r2);
        CHECK(lg.graph.edges() == ref.edges());
    }
}

TEST_CASE("sample_gbm is deterministic in the seed") {
    auto a = sample_gbm({200, 6.0, 1.5, 1234});
    auto b = sample_gbm({200, 6.0, 1.5, 1234});
    CHECK(a.features == b.features);
    CHECK(a.graph.edges() == b.graph.edges());
    auto c = sample_gbm({200, 6.0, 1.5, 1235});
    CHECK(a.graph.edges() != c.graph.edges());
}

TEST_CASE("sample_gbm mean edge count tracks the closed-form expectation") {
    const int n = 1000;
    const double th1 = 10.0, th2 = 2.0;
    const double r1 = th1 * std::log(n) / n, r2 = th2 * std::log(n) / n;
    // intra pairs: 2*C(n/2,2), cross pairs: (n/2)^2; P(edge) = 2r
    const double expect = 2.0 * (n / 2) * (n / 2 - 1) / 2.0 * 2.0 * r1 + (n / 2.0) * (n / 2.0) * 2.0 * r2;
    double total = 0.0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s)
        total += static_cast<double>(sample_gbm({n, th1, th2, 4000ULL + static_cast<std::uint64_t>(s)}).graph.edge_count());
    double mean = total / seeds;
    CHECK(std::fabs(mean - expect) < 4.0 * std::sqrt(expect));
}

TEST_CASE("sample_rgg validation and forced features") {
    CHECK_THROWS_AS(sample_rgg({10, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_rgg({10, -0.1, 1}), std::invalid_argument);
    CHECK(sample_rgg({10, 0.0, 1}).edge_count() == 0);

    std::vector<double> forced = {0.0, 1.0 / 3.0, 2.0 / 3.0};
    Graph tri = sample_rgg({3, 0.4999, 0}, &forced);
    CHECK(tri.edge_count() == 3);

    std::vector<double> bad = {0.0, 1.0, 0.5};
    CHECK_THROWS_AS(sample_rgg({3, 0.2, 0}, &bad), std::invalid_argument);
}

TEST_CASE("sample_rgg mean degree approaches 2r(n-1)") {
    const int n = 100;
    const double r = 0.1;
    double total_deg = 0.0;
    for (int s = 0; s < 100; ++s) {
        Graph g = sample_rgg({n, r, 80000ULL + static_cast<std::uint64_t>(s)});
        total_deg += 2.0 * static_cast<double>(g.edge_count()) / n;
    }
    CHECK(std::fabs(total_deg / 100.0 - 2.0 * r * (n - 1)) < 1.0);
}

TEST_CASE("gbm cluster subgraph is distributed like an rgg on n/2 nodes") {
    // the label-1 cluster of GBM(500, 6, 1.5) vs RGG(250, 6*log(500)/500),
    // 200 seeds each, KS at 5%. Degrees within one graph are correlated, so
    // the samples entering each test are one-per-graph: the degree of node 0
    // (marginal law) and the doubled edge count (mean degree).
    const int n = 500;
    const double th1 = 6.0;
    std::vector<int> deg0_gbm, deg0_rgg, size_gbm, size_rgg;
    std::vector<int> cluster(n / 2);
    std::iota(cluster.begin(), cluster.end(), 0);
    for (int s = 0; s < 200; ++s) {
        auto lg = sample_gbm({n, th1, 1.5, 100000ULL + static_cast<std::uint64_t>(s)});
        Graph sub = induced_subgraph(lg.graph, cluster);
        deg0_gbm.push_back(sub.degree(0));
        size_gbm.push_back(static_cast<int>(sub.edge_count()));
        Graph rgg = sample_rgg({n / 2, th1 * std::log(n) / n, 200000ULL + static_cast<std::uint64_t>(s)});
        deg0_rgg.push_back(rgg.degree(0));
        size_rgg.push_back(static_cast<int>(rgg.edge_count()));
    }
    CHECK(ks_two_sample_p(deg0_gbm, deg0_rgg) > 0.05);
    CHECK(ks_two_sample_p(size_gbm, size_rgg) > 0.05);
}
