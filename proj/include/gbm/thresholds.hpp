#pragma once
#include <cstdint>
#include <optional>

namespace gbm {

// Regime selector for the connectivity threshold: Dense applies when
// 2*theta2 >= 2, Sparse when 2*theta2 <= 2 (requires theta1 >= 2).
enum class Regime { Dense, Sparse };

Regime regime_for(double theta1, double theta2);

// Chernoff-gap primitive a*ln(a/m) + m - a (m > 0, a >= 0). It is the large
// deviation exponent, in units of log(n), of a Binomial with mean m*log(n)
// crossing level a*log(n); valid on both tails.
double chernoff_gap(double a, double m);

// Root of (2*theta2+t)*ln((2*theta2+t)/(2*theta2)) - t = 1 over t >= 0.
double solve_t1(double theta2);

// Root of (2*theta2-t)*ln((2*theta2-t)/(2*theta2)) + t = 1 over [0, 2*theta2).
double solve_t2(double theta2);

// Largest t in [0, 2*theta1-4*theta2-2*t1] with
// (4*theta2+2*t1)*ln((4*theta2+2*t1)/(2*theta1-t)) + 2*theta1-t-4*theta2-2*t1 > 2;
// nullopt when the domain is empty or no t qualifies.
std::optional<double> solve_t3(double theta1, double theta2, double t1);

// Smallest t in [max(2*theta2, 2*theta1-4*theta2+2*t2), theta1] with
// (4*theta2-2*t2)*ln((4*theta2-2*t2)/(2*theta1-t)) + 2*theta1-t-4*theta2+2*t2 > 2;
// nullopt when the domain is empty or no t qualifies.
std::optional<double> solve_t4(double theta1, double theta2, double t2);

// Connectivity margin: smallest t >= 0 satisfying the regime's condition
// ((s-t)*ln((s-t)/s) + t > rhs with s = theta1+theta2-2, rhs = 1 in the dense
// regime; s = 2*theta1-2, rhs = 2 in the sparse regime).
double solve_eta(double theta1, double theta2);

// Triangle-count threshold: E_T*n is the Phase-1 cut level.
double compute_E_T(double theta1, double theta2, double eta, int n);

// Exponent of the surviving-cross-edge bound.
double compute_epsilon(double theta1, double theta2, double eta);

// Largest r in (0, min(theta1-theta2-t1, 2)) with
// (2*theta2+t1)*ln((2*theta2+t1)/(theta1+theta2-r)) + theta1+theta2-r-(2*theta2+t1) > 1,
// clamped to the domain's sup when the condition holds throughout; nullopt
// when the domain is empty or nothing qualifies.
std::optional<double> solve_R(double theta1, double theta2, double t1);

// Whether the aggressive-pruning bound's standing assumption
// 2*theta2 + t1 > theta1 + theta2 - 2 - eta holds.
bool aggressive_bound_assumption(double theta1, double theta2);

// Zero-query recovery frontier: smallest theta1 >= 2*theta2 for which the
// interval-pruning recovery condition holds (tolerance 1e-4). An empty t3
// set enters the condition as 0, an empty t4 set as theta1 (the kept-edge
// ranges [0,t3] and [t4,theta1] degenerate rather than invalidate it).
double min_theta1_unsupervised(double theta2);

// Smallest gap theta1 - theta2 with theta1-theta2-2-eta >= t1 (Phase 1 alone
// recovers).
double min_gap_active(double theta2);

// SBM counterpart frontier: a = (sqrt(b) + sqrt(2))^2.
double sbm_min_a(double b);

struct PoissonApprox {
    double lambda;    // n*(1-tau)^n
    double tv_bound;  // n*(1-tau)^n - (n-1)*(1-tau/(1-tau))^n
};

// Poisson approximation of (#disjoint components - 1) of an RGG(n, tau);
// requires 2*tau < 1.
PoissonApprox poisson_component_approx(int n, double tau);

// ceil(ln(2/delta)/ln 2) + ceil(log2 n) + (cut_size-1)*(ceil(log2(2D+1))+1).
long long s2_budget(int n, int cut_size, int diameter, double delta);

// (3/2)*n^(1-R/2) + 2, the component-count (and hence query) bound.
double component_count_bound(int n, double R);

struct ThresholdSet {
    double t1 = 0, t2 = 0;
    std::optional<double> t3, t4;
    double eta = 0;
    double E_T = 0;
    double epsilon = 0;
    std::optional<double> R;
    double E_L = 0, E_R = 0;
    Regime regime = Regime::Dense;
    bool aggressive_assumption = false;
};

// Solves everything above for one (theta1, theta2, n).
ThresholdSet solve_threshold_set(double theta1, double theta2, int n);

} // namespace gbm
