#include "gbm/active.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "gbm/thresholds.hpp"
#include "gbm/triangles.hpp"

namespace gbm {

namespace {

using Adj = std::vector<std::vector<int>>;

void remove_edge(Adj& adj, int u, int v) {
    auto& a = adj[static_cast<std::size_t>(u)];
    auto& b = adj[static_cast<std::size_t>(v)];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    b.erase(std::lower_bound(b.begin(), b.end(), u));
}

constexpr int kUnreached = -1;

// BFS distances from a set of sources, optionally stopping past max_depth.
std::vector<int> bfs_multi(const Adj& adj, const std::vector<int>& sources,
                           int max_depth = std::numeric_limits<int>::max()) {
    std::vector<int> dist(adj.size(), kUnreached);
    std::deque<int> queue;
    for (int s : sources) {
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int du = dist[static_cast<std::size_t>(u)];
        if (du >= max_depth) continue;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] == kUnreached) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// BFS parents from one source with ascending-id neighbor order (lists are
// sorted), giving the canonical shortest-path tree.
std::vector<int> bfs_parents(const Adj& adj, int src) {
    std::vector<int> parent(adj.size(), kUnreached);
    std::deque<int> queue{src};
    parent[static_cast<std::size_t>(src)] = src;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(v)] == kUnreached) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    return parent;
}

// labels: 0 = unqueried, 1/2 = revealed label.
std::optional<int> mssp_on(const Adj& adj, const std::vector<std::uint8_t>& lab) {
    std::vector<int> side1, side2;
    for (std::size_t u = 0; u < lab.size(); ++u) {
        if (lab[u] == 1) side1.push_back(static_cast<int>(u));
        else if (lab[u] == 2) side2.push_back(static_cast<int>(u));
    }
    if (side1.empty() || side2.empty()) return std::nullopt;

    auto dist1 = bfs_multi(adj, side1);
    int dmin = std::numeric_limits<int>::max();
    for (int v : side2) {
        int d = dist1[static_cast<std::size_t>(v)];
        if (d != kUnreached && d < dmin) dmin = d;
    }
    if (dmin == std::numeric_limits<int>::max()) return std::nullopt;
    if (dmin < 2) return std::nullopt;

    // smallest (u, v), u < v, over all pairs at distance exactly dmin
    std::pair<int, int> best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (int v : side2) {
        if (dist1[static_cast<std::size_t>(v)] != dmin) continue;
        auto dv = bfs_multi(adj, {v}, dmin);
        for (int u : side1)
            if (dv[static_cast<std::size_t>(u)] == dmin)
                best = std::min(best, std::make_pair(std::min(u, v), std::max(u, v)));
    }

    auto [a, b] = best;
    auto parent = bfs_parents(adj, a);
    std::vector<int> path;
    for (int x = b; x != a; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    path.push_back(a);
    std::reverse(path.begin(), path.end());  // path[0] = a, path[dmin] = b
    return path[static_cast<std::size_t>(dmin / 2)];
}

bool policy_satisfied(const Adj& adj, const std::vector<std::uint8_t>& lab,
                      TerminationPolicy policy) {
    auto comps = connected_components(adj);
    std::size_t non_singleton = 0;
    for (const auto& comp : comps) {
        if (comp.size() >= 2) ++non_singleton;
        std::uint8_t seen = 0;
        for (int u : comp) {
            std::uint8_t l = lab[static_cast<std::size_t>(u)];
            if (l == 0) continue;
            if (seen == 0) seen = l;
            else if (seen != l) return false;  // disagreeing queried nodes
        }
    }
    if (policy == TerminationPolicy::TwoComponents) return comps.size() == 2;
    return non_singleton == 2;
}

} // namespace

std::optional<int> mssp(const Graph& g, const std::map<int, std::uint8_t>& labeled) {
    std::vector<std::uint8_t> lab(static_cast<std::size_t>(g.node_count()), 0);
    for (auto [u, l] : labeled) {
        if (u < 0 || u >= g.node_count()) throw std::invalid_argument("mssp: node out of range");
        if (l != 1 && l != 2) throw std::invalid_argument("mssp: labels must be 1 or 2");
        lab[static_cast<std::size_t>(u)] = l;
    }
    return mssp_on(g.adjacency(), lab);
}

RecoveryResult s2_run(const Graph& g, Oracle& oracle, TerminationPolicy policy, Rng& rng,
                      const std::vector<int>& global_ids) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("s2_run: empty graph");
    if (!global_ids.empty() && static_cast<int>(global_ids.size()) != n)
        throw std::invalid_argument("s2_run: id map size mismatch");
    auto gid = [&](int u) { return global_ids.empty() ? u : global_ids[static_cast<std::size_t>(u)]; };

    const long long queries_before = oracle.queries_used();
    Adj adj = g.adjacency();
    std::vector<std::uint8_t> lab(static_cast<std::size_t>(n), 0);
    TerminatedBy by = TerminatedBy::Components;

    while (true) {
        if (policy_satisfied(adj, lab, policy)) {
            by = TerminatedBy::Separation;
            break;
        }
        std::optional<int> next = mssp_on(adj, lab);
        if (!next) {
            std::vector<int> unlabeled;
            for (int u = 0; u < n; ++u)
                if (lab[static_cast<std::size_t>(u)] == 0) unlabeled.push_back(u);
            if (unlabeled.empty()) {
                by = TerminatedBy::Components;
                break;
            }
            next = unlabeled[static_cast<std::size_t>(rng.next_below(unlabeled.size()))];
        }
        int x = *next;
        if (!oracle.can_query(gid(x))) {
            by = TerminatedBy::Budget;
            break;
        }
        std::uint8_t lx = oracle.query(gid(x));
        auto nbs = adj[static_cast<std::size_t>(x)];  // copy, edges get removed below
        for (int y : nbs) {
            std::uint8_t ly = lab[static_cast<std::size_t>(y)];
            if (ly != 0 && ly != lx) remove_edge(adj, x, y);
        }
        lab[static_cast<std::size_t>(x)] = lx;
    }

    // label final components; unqueried ones cost one extra query each
    RecoveryResult res;
    res.predicted.assign(static_cast<std::size_t>(n), 1);
    for (const auto& comp : connected_components(adj)) {
        long long c1 = 0, c2 = 0;
        for (int u : comp) {
            if (lab[static_cast<std::size_t>(u)] == 1) ++c1;
            else if (lab[static_cast<std::size_t>(u)] == 2) ++c2;
        }
        std::uint8_t l;
        if (c1 == 0 && c2 == 0) {
            int u0 = comp.front();
            if (oracle.can_query(gid(u0))) {
                l = oracle.query(gid(u0));
            } else {
                l = 1;
                by = TerminatedBy::Budget;
            }
        } else {
            l = c2 > c1 ? 2 : 1;  // pure unless the budget cut the loop short
        }
        for (int u : comp) res.predicted[static_cast<std::size_t>(u)] = l;
    }
    // queried labels are never overridden
    for (int u = 0; u < n; ++u)
        if (lab[static_cast<std::size_t>(u)] != 0)
            res.predicted[static_cast<std::size_t>(u)] = lab[static_cast<std::size_t>(u)];

    res.queries = oracle.queries_used() - queries_before;
    res.terminated_by = by;
    return res;
}

RecoveryResult algorithm1_with_threshold(const Graph& g, Oracle& oracle, double count_threshold,
                                         Rng& rng) {
    if (g.node_count() < 2) throw std::invalid_argument("algorithm1: need n >= 2");
    auto counts = triangle_counts(g);
    Graph gr = prune_threshold(g, counts, count_threshold);

    RecoveryResult res = s2_run(gr, oracle, TerminationPolicy::TwoComponents, rng);
    res.phase1_removed = static_cast<long long>(g.edge_count() - gr.edge_count());
    res.components_after_prune = static_cast<long long>(connected_components(gr).size());
    return res;
}

RecoveryResult algorithm1(const Graph& g, Oracle& oracle, double theta1, double theta2, Rng& rng) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("algorithm1: need n >= 2");
    const double eta = solve_eta(theta1, theta2);
    const double E_T = compute_E_T(theta1, theta2, eta, n);
    return algorithm1_with_threshold(g, oracle, n * E_T, rng);
}

RecoveryResult algorithm1(const LabeledGraph& lg, Rng& rng) {
    Oracle oracle(lg.sigma);
    return algorithm1(lg.graph, oracle, lg.params.theta1, lg.params.theta2, rng);
}

RecoveryResult algorithm2(const Graph& g, Oracle& oracle, double theta1, double theta2) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("algorithm2: need n >= 2");
    if (theta1 < theta2) throw std::invalid_argument("algorithm2: theta1 must be >= theta2");
    const double t1 = solve_t1(theta2);
    const double thr = (2.0 * theta2 + t1) * std::log(static_cast<double>(n));
    auto counts = triangle_counts(g);
    Graph gr = prune_threshold(g, counts, thr);

    const long long queries_before = oracle.queries_used();
    auto comps = connected_components(gr);
    RecoveryResult res;
    res.predicted.assign(static_cast<std::size_t>(n), 1);
    res.terminated_by = TerminatedBy::Components;
    for (const auto& comp : comps) {
        std::uint8_t l = 1;
        if (oracle.can_query(comp.front())) {
            l = oracle.query(comp.front());
        } else {
            res.terminated_by = TerminatedBy::Budget;
        }
        for (int u : comp) res.predicted[static_cast<std::size_t>(u)] = l;
    }
    res.queries = oracle.queries_used() - queries_before;
    res.phase1_removed = static_cast<long long>(g.edge_count() - gr.edge_count());
    res.components_after_prune = static_cast<long long>(comps.size());
    return res;
}

RecoveryResult algorithm2(const LabeledGraph& lg) {
    Oracle oracle(lg.sigma);
    return algorithm2(lg.graph, oracle, lg.params.theta1, lg.params.theta2);
}

RecoveryResult unsupervised_interval(const Graph& g, double theta2) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("unsupervised_interval: need n >= 2");
    const double t1 = solve_t1(theta2);
    const double t2 = solve_t2(theta2);
    const double logn = std::log(static_cast<double>(n));
    auto counts = triangle_counts(g);
    Graph gr = prune_interval(g, counts, (2.0 * theta2 - t2) * logn, (2.0 * theta2 + t1) * logn);

    auto comps = connected_components(gr);
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (comps[a].size() != comps[b].size()) return comps[a].size() > comps[b].size();
        return comps[a].front() < comps[b].front();
    });

    RecoveryResult res;
    res.predicted.assign(static_cast<std::size_t>(n), 1);
    if (order.size() >= 2)
        for (int u : comps[order[1]]) res.predicted[static_cast<std::size_t>(u)] = 2;
    res.queries = 0;
    res.phase1_removed = static_cast<long long>(g.edge_count() - gr.edge_count());
    res.components_after_prune = static_cast<long long>(comps.size());
    res.terminated_by = TerminatedBy::Components;
    return res;
}

RecoveryResult real_pipeline(const Graph& g, Oracle& oracle, const RealPipelineParams& params,
                             Rng& rng) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("real_pipeline: need n >= 2");
    if (params.T1 < 0) throw std::invalid_argument("real_pipeline: T1 must be >= 0");

    auto counts = triangle_counts(g);
    // strict cutoff: drop edges covered by fewer than T1 triangles
    Graph gp = params.T1 == 0 ? g : prune_interval(g, counts, 0.0, params.T1 - 1.0);
    auto comps = connected_components(gp);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[best].size()) best = i;
    const std::vector<int>& core = comps[best];
    if (core.size() < 2) throw std::runtime_error("real_pipeline: largest surviving component has fewer than 2 nodes");

    Graph sub = induced_subgraph(gp, core);
    const long long queries_before = oracle.queries_used();
    RecoveryResult phase2 = s2_run(sub, oracle, TerminationPolicy::TwoNonSingleton, rng, core);

    RecoveryResult res;
    res.predicted.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < core.size(); ++i)
        res.predicted[static_cast<std::size_t>(core[i])] = phase2.predicted[i];

    // majority voting over already-labeled neighbors in the original graph,
    // synchronous passes until nothing new gets a labeled neighbor
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<std::pair<int, std::uint8_t>> assign;
        for (int w = 0; w < n; ++w) {
            if (res.predicted[static_cast<std::size_t>(w)] != 0) continue;
            long long c1 = 0, c2 = 0;
            for (int u : g.neighbors(w)) {
                if (res.predicted[static_cast<std::size_t>(u)] == 1) ++c1;
                else if (res.predicted[static_cast<std::size_t>(u)] == 2) ++c2;
            }
            if (c1 + c2 == 0) continue;
            assign.emplace_back(w, c2 > c1 ? 2 : 1);  // ties go to label 1
        }
        for (auto [w, l] : assign) {
            res.predicted[static_cast<std::size_t>(w)] = l;
            progress = true;
        }
    }
    for (auto& l : res.predicted)
        if (l == 0) l = 1;  // never adjacent to the labeled core

    res.queries = oracle.queries_used() - queries_before;
    res.phase1_removed = static_cast<long long>(g.edge_count() - gp.edge_count());
    res.components_after_prune = static_cast<long long>(comps.size());
    res.terminated_by = phase2.terminated_by;
    return res;
}

} // namespace gbm
