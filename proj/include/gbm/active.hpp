#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gbm/gbm_model.hpp"
#include "gbm/graph.hpp"
#include "gbm/oracle.hpp"
#include "gbm/rng.hpp"

namespace gbm {

enum class TerminatedBy { Separation, Budget, Components };

struct RecoveryResult {
    std::vector<std::uint8_t> predicted;   // labels in {1,2}, one per node
    long long queries = 0;
    long long phase1_removed = 0;
    long long components_after_prune = 0;
    TerminatedBy terminated_by = TerminatedBy::Components;
};

// Separation policies for the query loop: stop once the working graph has
// exactly two components (or two non-singleton ones) and no component's
// queried nodes disagree.
enum class TerminationPolicy { TwoComponents, TwoNonSingleton };

// Midpoint of the shortest shortest-path between oppositely-labeled nodes.
// Among minimal-length pairs the lexicographically smallest (u, v), u < v,
// wins; the returned node sits floor(l/2) steps from u along the BFS path
// (ascending-id neighbor order). Requires minimal length >= 2, else nullopt.
std::optional<int> mssp(const Graph& g, const std::map<int, std::uint8_t>& labeled);

// Adaptive query loop: random unlabeled node when no midpoint exists,
// midpoints otherwise; every edge joining disagreeing queried nodes is
// removed after each query. Final components are labeled by their queried
// members; an unqueried component costs one extra query. `global_ids`, when
// non-empty, maps node i of `g` to the oracle's id space.
RecoveryResult s2_run(const Graph& g, Oracle& oracle, TerminationPolicy policy, Rng& rng,
                      const std::vector<int>& global_ids = {});

// Connectivity-preserving pruning at n*E_T followed by the query loop.
// The threshold comes from the solved eta, or can be supplied directly as
// n*E_T when the thetas are unknown.
RecoveryResult algorithm1(const Graph& g, Oracle& oracle, double theta1, double theta2, Rng& rng);
RecoveryResult algorithm1(const LabeledGraph& lg, Rng& rng);
RecoveryResult algorithm1_with_threshold(const Graph& g, Oracle& oracle, double count_threshold,
                                         Rng& rng);

// Aggressive pruning at (2*theta2 + t1)*log(n); one query per surviving
// component (smallest id). Deterministic.
RecoveryResult algorithm2(const Graph& g, Oracle& oracle, double theta1, double theta2);
RecoveryResult algorithm2(const LabeledGraph& lg);

// Zero-query interval-pruning baseline: removes edges with counts in
// [n*E_L, n*E_R], labels the two largest surviving components 1 and 2.
RecoveryResult unsupervised_interval(const Graph& g, double theta2);

struct RealPipelineParams {
    int T1 = 0;                          // triangle-count cutoff (strict <)
    std::optional<long long> budget;
};

// Three-phase pipeline for graphs with unknown thetas: strict-threshold
// pruning and the largest surviving component, the query loop on it with the
// two-non-singleton policy, then iterated majority voting over original-graph
// neighbors for everything outside it (ties and isolated leftovers get 1).
RecoveryResult real_pipeline(const Graph& g, Oracle& oracle, const RealPipelineParams& params,
                             Rng& rng);

} // namespace gbm
