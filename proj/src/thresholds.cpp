#include "gbm/thresholds.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gbm {

namespace {

constexpr double kRootTol = 1e-9;
constexpr double kBracketCap = 1e6;

// Root of a continuous monotone-increasing f on [lo, hi] with f(lo) <= 0 <= f(hi).
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > kRootTol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

long long ceil_log2_int(long long x) {
    if (x <= 1) return 0;
    return static_cast<long long>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

} // namespace

double chernoff_gap(double a, double m) {
    if (!(m > 0.0) || a < 0.0) throw std::invalid_argument("chernoff_gap domain");
    if (a == 0.0) return m;
    return a * std::log(a / m) + m - a;
}

Regime regime_for(double theta1, double theta2) {
    if (2.0 * theta2 >= 2.0) return Regime::Dense;
    if (theta1 >= 2.0) return Regime::Sparse;
    throw std::invalid_argument("no regime applies: need theta2 >= 1 or theta1 >= 2");
}

double solve_t1(double theta2) {
    if (!(theta2 > 0.0)) throw std::invalid_argument("solve_t1: theta2 must be > 0");
    const double c = 2.0 * theta2;
    auto f = [&](double t) { return chernoff_gap(c + t, c) - 1.0; };
    double hi = 1.0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (hi > kBracketCap) throw std::runtime_error("solve_t1: bracket cap hit");
    }
    return bisect(f, 0.0, hi);
}

double solve_t2(double theta2) {
    if (!(theta2 > 0.0)) throw std::invalid_argument("solve_t2: theta2 must be > 0");
    const double c = 2.0 * theta2;
    // condition value tends to c as t -> c, so a root needs c > 1
    if (c <= 1.0) throw std::invalid_argument("solve_t2: condition unsatisfiable for 2*theta2 <= 1");
    auto f = [&](double t) { return chernoff_gap(c - t, c) - 1.0; };
    return bisect(f, 0.0, c * (1.0 - 1e-12));
}

std::optional<double> solve_t3(double theta1, double theta2, double t1) {
    if (!(theta2 > 0.0) || t1 < 0.0) throw std::invalid_argument("solve_t3 domain");
    const double c = 4.0 * theta2 + 2.0 * t1;
    const double hi = 2.0 * theta1 - 4.0 * theta2 - 2.0 * t1;
    if (hi < 0.0) return std::nullopt;
    // m = 2*theta1 - t >= c on the domain, and the gap shrinks as t grows
    auto cond = [&](double t) { return chernoff_gap(c, 2.0 * theta1 - t) - 2.0; };
    if (cond(0.0) <= 0.0) return std::nullopt;
    if (cond(hi) > 0.0) return hi;
    auto f = [&](double t) { return -cond(t); };
    return bisect(f, 0.0, hi);
}

std::optional<double> solve_t4(double theta1, double theta2, double t2) {
    if (!(theta2 > 0.0) || t2 < 0.0) throw std::invalid_argument("solve_t4 domain");
    const double c = 4.0 * theta2 - 2.0 * t2;
    if (c <= 0.0) return std::nullopt;
    const double lo = std::max(2.0 * theta2, 2.0 * theta1 - 4.0 * theta2 + 2.0 * t2);
    const double hi = theta1;
    if (lo > hi) return std::nullopt;
    // m = 2*theta1 - t <= c on the domain, and the gap grows as t grows
    auto cond = [&](double t) { return chernoff_gap(c, 2.0 * theta1 - t) - 2.0; };
    if (cond(hi) <= 0.0) return std::nullopt;
    if (cond(lo) > 0.0) return lo;
    return bisect(cond, lo, hi);
}

double solve_eta(double theta1, double theta2) {
    const Regime reg = regime_for(theta1, theta2);
    const double s = reg == Regime::Dense ? theta1 + theta2 - 2.0 : 2.0 * theta1 - 2.0;
    const double rhs = reg == Regime::Dense ? 1.0 : 2.0;
    // condition value tends to s as t -> s
    if (s <= rhs) throw std::invalid_argument("solve_eta: condition unsatisfiable for these thetas");
    auto f = [&](double t) { return chernoff_gap(s - t, s) - rhs; };
    return bisect(f, 0.0, s * (1.0 - 1e-12));
}

double compute_E_T(double theta1, double theta2, double eta, int n) {
    if (n < 2) throw std::invalid_argument("compute_E_T: n must be >= 2");
    const Regime reg = regime_for(theta1, theta2);
    const double coef = reg == Regime::Dense ? theta1 + theta2 - 2.0 - eta
                                             : 0.5 * (2.0 * theta1 - 2.0 - eta);
    return coef * std::log(static_cast<double>(n)) / n;
}

double compute_epsilon(double theta1, double theta2, double eta) {
    const Regime reg = regime_for(theta1, theta2);
    const double a = reg == Regime::Dense ? theta1 + theta2 - 2.0 - eta
                                          : 0.5 * (2.0 * theta1 - 2.0 - eta);
    return chernoff_gap(a, 2.0 * theta2);
}

std::optional<double> solve_R(double theta1, double theta2, double t1) {
    if (!(theta2 > 0.0) || t1 < 0.0 || theta1 < theta2)
        throw std::invalid_argument("solve_R domain");
    const double c = 2.0 * theta2 + t1;
    const double hi = std::min(theta1 - theta2 - t1, 2.0);
    if (hi <= 0.0) return std::nullopt;
    // m = theta1 + theta2 - r > c on the domain; the gap shrinks as r grows
    auto cond = [&](double r) { return chernoff_gap(c, theta1 + theta2 - r) - 1.0; };
    if (cond(0.0) <= 0.0) return std::nullopt;
    if (cond(hi) > 0.0) return hi;
    auto f = [&](double r) { return -cond(r); };
    return bisect(f, 0.0, hi);
}

bool aggressive_bound_assumption(double theta1, double theta2) {
    const double t1 = solve_t1(theta2);
    const double eta = solve_eta(theta1, theta2);
    return 2.0 * theta2 + t1 > theta1 + theta2 - 2.0 - eta;
}

namespace {

bool unsupervised_condition(double theta1, double theta2, double t1, double t2) {
    auto t3 = solve_t3(theta1, theta2, t1);
    auto t4 = solve_t4(theta1, theta2, t2);
    const double a = t3.value_or(0.0);       // empty short-edge range
    const double b = t4.value_or(theta1);    // empty long-edge range
    if (theta1 - b + a > 2.0) return true;
    return theta1 > std::max(1.0 + b, 2.0);
}

} // namespace

double min_theta1_unsupervised(double theta2) {
    if (!(theta2 > 0.0)) throw std::invalid_argument("min_theta1_unsupervised: theta2 must be > 0");
    const double t1 = solve_t1(theta2);
    const double t2 = solve_t2(theta2);
    auto ok = [&](double th1) { return unsupervised_condition(th1, theta2, t1, t2); };
    double lo = 2.0 * theta2;
    if (ok(lo)) return lo;
    // forward scan to bracket the frontier, then bisect to 1e-4
    double hi = lo;
    do {
        lo = hi;
        hi += 0.5;
        if (hi > kBracketCap) throw std::runtime_error("min_theta1_unsupervised: no frontier found");
    } while (!ok(hi));
    while (hi - lo > 1e-4) {
        double mid = 0.5 * (lo + hi);
        if (ok(mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

double min_gap_active(double theta2) {
    if (!(theta2 > 0.0)) throw std::invalid_argument("min_gap_active: theta2 must be > 0");
    const double t1 = solve_t1(theta2);
    // margin(theta1) = theta1 - theta2 - 2 - eta - t1 is increasing in theta1
    auto margin = [&](double th1) { return th1 - theta2 - 2.0 - solve_eta(th1, theta2) - t1; };
    double lo = (theta2 >= 1.0 ? std::max(theta2, 3.0 - theta2) : std::max(theta2, 2.0)) + 1e-9;
    // forward scan to the first sign change, then bisect
    double hi = lo + 0.25;
    while (margin(hi) < 0.0) {
        lo = hi;
        hi += 0.25;
        if (hi > kBracketCap) throw std::runtime_error("min_gap_active: bracket cap hit");
    }
    return bisect(margin, lo, hi) - theta2;
}

double sbm_min_a(double b) {
    if (b < 0.0) throw std::invalid_argument("sbm_min_a: b must be >= 0");
    double s = std::sqrt(b) + std::sqrt(2.0);
    return s * s;
}

PoissonApprox poisson_component_approx(int n, double tau) {
    if (n < 1) throw std::invalid_argument("poisson_component_approx: n must be >= 1");
    if (!(tau >= 0.0) || 2.0 * tau >= 1.0)
        throw std::invalid_argument("poisson_component_approx: need 0 <= 2*tau < 1");
    PoissonApprox out;
    out.lambda = n * std::pow(1.0 - tau, n);
    out.tv_bound = out.lambda - (n - 1) * std::pow(1.0 - tau / (1.0 - tau), n);
    return out;
}

long long s2_budget(int n, int cut_size, int diameter, double delta) {
    if (n < 1 || cut_size < 1 || diameter < 1)
        throw std::invalid_argument("s2_budget: n, cut_size, diameter must be >= 1");
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("s2_budget: delta must lie in (0, 1]");
    // nudge before ceil so exact powers of two do not round up
    long long q = static_cast<long long>(std::ceil(std::log(2.0 / delta) / std::log(2.0) - 1e-12));
    q += ceil_log2_int(n);
    q += static_cast<long long>(cut_size - 1) * (ceil_log2_int(2LL * diameter + 1) + 1);
    return q;
}

double component_count_bound(int n, double R) {
    if (n < 1 || !(R > 0.0 && R < 2.0 + 1e-12))
        throw std::invalid_argument("component_count_bound: need n >= 1, 0 < R <= 2");
    return 1.5 * std::pow(static_cast<double>(n), 1.0 - R / 2.0) + 2.0;
}

ThresholdSet solve_threshold_set(double theta1, double theta2, int n) {
    ThresholdSet ts;
    ts.regime = regime_for(theta1, theta2);
    ts.t1 = solve_t1(theta2);
    ts.t2 = solve_t2(theta2);
    ts.t3 = solve_t3(theta1, theta2, ts.t1);
    ts.t4 = solve_t4(theta1, theta2, ts.t2);
    ts.eta = solve_eta(theta1, theta2);
    ts.E_T = compute_E_T(theta1, theta2, ts.eta, n);
    ts.epsilon = compute_epsilon(theta1, theta2, ts.eta);
    ts.R = solve_R(theta1, theta2, ts.t1);
    const double logn_n = std::log(static_cast<double>(n)) / n;
    ts.E_L = (2.0 * theta2 - ts.t2) * logn_n;
    ts.E_R = (2.0 * theta2 + ts.t1) * logn_n;
    ts.aggressive_assumption = 2.0 * theta2 + ts.t1 > theta1 + theta2 - 2.0 - ts.eta;
    return ts;
}

} // namespace gbm
