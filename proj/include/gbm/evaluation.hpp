#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "gbm/active.hpp"
#include "gbm/graph.hpp"

namespace gbm {

struct AccuracyReport {
    double accuracy = 0.0;
    enum class Permutation { Identity, Swap } best_permutation = Permutation::Identity;
    bool exact = false;
};

// Fraction of matching nodes maximized over the two label permutations.
AccuracyReport accuracy_up_to_permutation(const std::vector<std::uint8_t>& predicted,
                                          const std::vector<std::uint8_t>& truth);

struct SpectralResult {
    std::vector<std::uint8_t> labels;
    bool converged = false;
    int iterations = 0;
};

// Two-way partition from the sign of the Laplacian's second eigenvector,
// computed by shifted power iteration with deflation against the all-ones
// vector (tolerance 1e-8, at most 10^4 iterations). Zero entries go to
// label 1; non-convergence is flagged and the last iterate's signs are used.
SpectralResult spectral_baseline(const Graph& g);

// Fraction of runs whose query count stays under the component-count bound;
// nullopt when R is infeasible.
std::optional<double> fraction_within_query_bound(const std::vector<RecoveryResult>& results,
                                           int n, std::optional<double> R);

} // namespace gbm
