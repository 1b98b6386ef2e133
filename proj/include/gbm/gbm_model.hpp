#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

// Circular distance on the unit-circumference torus.
double torus_distance(double x, double y);

struct GbmParams {
    int n = 0;              // even, >= 4
    double theta1 = 0.0;    // intra-cluster radius coefficient, theta1 >= theta2
    double theta2 = 0.0;    // cross-cluster radius coefficient, >= 0
    std::uint64_t seed = 0;
};

struct RggParams {
    int n = 0;
    double r = 0.0;         // connection radius in [0, 1/2)
    std::uint64_t seed = 0;
};

struct LabeledGraph {
    Graph graph;
    std::vector<std::uint8_t> sigma;  // ground-truth labels in {1,2}, balanced
    std::vector<double> features;     // latent positions in [0,1)
    GbmParams params;
};

// Samples a two-community geometric block graph on the 1-D torus:
// features i.i.d. uniform, nodes 0..n/2-1 get label 1, edge (u,v) iff
// torus_distance <= (theta1 or theta2) * log(n)/n depending on label match.
// `forced_features` is a test hook that replaces the uniform draw.
LabeledGraph sample_gbm(const GbmParams& params,
                        const std::vector<double>* forced_features = nullptr);

Graph sample_rgg(const RggParams& params,
                 const std::vector<double>* forced_features = nullptr);

// Rebuilds the edge set from stored features/labels; used to cross-check
// the sweep construction against the definition.
Graph edges_from_features(const std::vector<double>& features,
                          const std::vector<std::uint8_t>& sigma,
                          double r_intra, double r_cross);

} // namespace gbm
