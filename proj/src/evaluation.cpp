#include "gbm/evaluation.hpp"

#include <cmath>
#include <stdexcept>

#include "gbm/rng.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {

AccuracyReport accuracy_up_to_permutation(const std::vector<std::uint8_t>& predicted,
                                          const std::vector<std::uint8_t>& truth) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("accuracy: length mismatch");
    if (predicted.empty()) throw std::invalid_argument("accuracy: empty labelings");
    std::size_t match = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if ((predicted[i] != 1 && predicted[i] != 2) || (truth[i] != 1 && truth[i] != 2))
            throw std::invalid_argument("accuracy: labels must be 1 or 2");
        if (predicted[i] == truth[i]) ++match;
    }
    const double n = static_cast<double>(truth.size());
    const double ident = static_cast<double>(match) / n;
    const double swapped = 1.0 - ident;
    AccuracyReport rep;
    rep.best_permutation = ident >= swapped ? AccuracyReport::Permutation::Identity
                                            : AccuracyReport::Permutation::Swap;
    rep.accuracy = std::max(ident, swapped);
    rep.exact = rep.accuracy == 1.0;
    return rep;
}

SpectralResult spectral_baseline(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("spectral_baseline: need n >= 2");
    const double shift = 2.0 * g.max_degree() + 1.0;  // Gershgorin bound on the Laplacian spectrum

    // deterministic start vector, orthogonalized against all-ones
    std::vector<double> v(static_cast<std::size_t>(n));
    Rng rng(0x5eedba11u);
    for (auto& x : v) x = rng.next_unit() - 0.5;

    auto orthonormalize = [&](std::vector<double>& w) {
        double mean = 0.0;
        for (double x : w) mean += x;
        mean /= n;
        double norm = 0.0;
        for (auto& x : w) {
            x -= mean;
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (auto& x : w) x /= norm;
        return norm;
    };
    orthonormalize(v);

    SpectralResult out;
    std::vector<double> w(static_cast<std::size_t>(n));
    const int max_iter = 10000;
    for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
        // w = (shift*I - L) v = shift*v - deg(u)*v_u + sum_nb v
        for (int u = 0; u < n; ++u) {
            double acc = (shift - g.degree(u)) * v[static_cast<std::size_t>(u)];
            for (int x : g.neighbors(u)) acc += v[static_cast<std::size_t>(x)];
            w[static_cast<std::size_t>(u)] = acc;
        }
        if (orthonormalize(w) == 0.0) break;  // start vector was in the deflated span
        double diff = 0.0;
        for (int u = 0; u < n; ++u)
            diff = std::max(diff, std::fabs(w[static_cast<std::size_t>(u)] - v[static_cast<std::size_t>(u)]));
        v.swap(w);
        if (diff < 1e-8) {
            out.converged = true;
            break;
        }
    }

    out.labels.assign(static_cast<std::size_t>(n), 1);
    for (int u = 0; u < n; ++u)
        if (v[static_cast<std::size_t>(u)] > 0.0) out.labels[static_cast<std::size_t>(u)] = 2;
    return out;
}

std::optional<double> fraction_within_query_bound(const std::vector<RecoveryResult>& results,
                                           int n, std::optional<double> R) {
    if (!R) return std::nullopt;
    if (results.empty()) throw std::invalid_argument("fraction_within_query_bound: no results");
    const double bound = component_count_bound(n, *R);
    std::size_t pass = 0;
    for (const auto& r : results)
        if (static_cast<double>(r.queries) <= bound) ++pass;
    return static_cast<double>(pass) / static_cast<double>(results.size());
}

} // namespace gbm
