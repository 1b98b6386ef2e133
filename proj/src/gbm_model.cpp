#include "gbm/gbm_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gbm/rng.hpp"

namespace gbm {

double torus_distance(double x, double y) {
    double d = std::fabs(x - y);
    return std::min(d, 1.0 - d);
}

namespace {

std::vector<double> draw_features(int n, std::uint64_t seed,
                                  const std::vector<double>* forced) {
    if (forced) {
        if (static_cast<int>(forced->size()) != n)
            throw std::invalid_argument("forced feature vector size mismatch");
        for (double x : *forced)
            if (!(x >= 0.0 && x < 1.0))
                throw std::invalid_argument("features must lie in [0,1)");
        return *forced;
    }
    Rng rng(seed);
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (auto& x : xs) x = rng.next_unit();
    return xs;
}

// Sorted circular sweep: every pair within forward gap <= r_max is visited
// exactly once (the wrapped gap of the same pair is 1 - gap > 1/2 > r_max).
// `keep(u, v, gap)` decides whether the candidate pair becomes an edge.
template <typename Keep>
std::vector<std::pair<int, int>> sweep_pairs(const std::vector<double>& xs,
                                             double r_max, Keep keep) {
    const int n = static_cast<int>(xs.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return xs[static_cast<std::size_t>(a)] < xs[static_cast<std::size_t>(b)] ||
                                         (xs[static_cast<std::size_t>(a)] == xs[static_cast<std::size_t>(b)] && a < b); });
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < i + n; ++k) {
            int j = k < n ? k : k - n;
            double gap = (k < n ? xs[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]
                                : xs[static_cast<std::size_t>(order[static_cast<std::size_t>(k - n)])] + 1.0) -
                         xs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            if (gap > r_max) break;
            int u = order[static_cast<std::size_t>(i)], v = order[static_cast<std::size_t>(j)];
            if (keep(u, v, gap)) out.emplace_back(u, v);
        }
    }
    return out;
}

} // namespace

LabeledGraph sample_gbm(const GbmParams& params, const std::vector<double>* forced_features) {
    const int n = params.n;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("gbm: n must be even and >= 4");
    if (params.theta2 < 0.0) throw std::invalid_argument("gbm: theta2 must be >= 0");
    if (params.theta1 < params.theta2) throw std::invalid_argument("gbm: theta1 must be >= theta2");
    const double r1 = params.theta1 * std::log(static_cast<double>(n)) / n;
    const double r2 = params.theta2 * std::log(static_cast<double>(n)) / n;
    if (r1 >= 0.5) throw std::invalid_argument("gbm: theta1*log(n)/n must be < 1/2");

    LabeledGraph lg;
    lg.params = params;
    lg.features = draw_features(n, params.seed, forced_features);
    lg.sigma.assign(static_cast<std::size_t>(n), 1);
    for (int u = n / 2; u < n; ++u) lg.sigma[static_cast<std::size_t>(u)] = 2;

    auto edges = sweep_pairs(lg.features, r1, [&](int u, int v, double gap) {
        bool same = lg.sigma[static_cast<std::size_t>(u)] == lg.sigma[static_cast<std::size_t>(v)];
        return gap <= (same ? r1 : r2);
    });
    lg.graph = Graph::from_edges(n, edges);
    return lg;
}

Graph sample_rgg(const RggParams& params, const std::vector<double>* forced_features) {
    if (params.n < 1) throw std::invalid_argument("rgg: n must be >= 1");
    if (!(params.r >= 0.0 && params.r < 0.5))
        throw std::invalid_argument("rgg: r must lie in [0, 1/2)");
    auto xs = draw_features(params.n, params.seed, forced_features);
    auto edges = sweep_pairs(xs, params.r, [](int, int, double) { return true; });
    return Graph::from_edges(params.n, edges);
}

Graph edges_from_features(const std::vector<double>& features,
                          const std::vector<std::uint8_t>& sigma,
                          double r_intra, double r_cross) {
    if (features.size() != sigma.size()) throw std::invalid_argument("size mismatch");
    const int n = static_cast<int>(features.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double d = torus_distance(features[static_cast<std::size_t>(u)], features[static_cast<std::size_t>(v)]);
            double r = sigma[static_cast<std::size_t>(u)] == sigma[static_cast<std::size_t>(v)] ? r_intra : r_cross;
            if (d <= r) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace gbm
