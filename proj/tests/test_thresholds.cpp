#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>
#include <vector>

#include "gbm/thresholds.hpp"

using namespace gbm;

namespace {

// two-sided flip check around an interior root of a monotone condition
void check_infimum_flip(double root, double rhs, const std::function<double(double)>& f) {
    const double tol = 1e-6;
    CHECK(f(root - tol) < rhs);
    CHECK(f(root + tol) > rhs);
}

} // namespace

TEST_CASE("solve_t1 matches independently bisected roots") {
    CHECK(solve_t1(1.0) == doctest::Approx(2.311070407).epsilon(1e-6));
    CHECK(solve_t1(2.0) == doctest::Approx(3.145092520).epsilon(1e-6));
    CHECK(solve_t1(4.0) == doctest::Approx(4.321020392).epsilon(1e-6));
    // residual and two-sided flip
    for (double th2 : {0.7, 1.0, 2.0, 3.0, 5.0}) {
        double c = 2.0 * th2;
        double t = solve_t1(th2);
        auto f = [&](double x) { return (c + x) * std::log((c + x) / c) - x; };
        CHECK(std::fabs(f(t) - 1.0) < 1e-7);
        check_infimum_flip(t, 1.0, f);
    }
    // condition value at t = 0 is 0 < 1, so t1 > 0 always
    CHECK(solve_t1(3.0) > 0.0);
    CHECK_THROWS_AS(solve_t1(0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_t1(-1.0), std::invalid_argument);
}

TEST_CASE("solve_t1 is increasing in theta2") {
    double prev = 0.0;
    for (double th2 = 0.5; th2 <= 6.0; th2 += 0.25) {
        double t = solve_t1(th2);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("solve_t2 matches independently bisected roots") {
    CHECK(solve_t2(1.0) == doctest::Approx(1.626635382).epsilon(1e-6));
    CHECK(solve_t2(2.0) == doctest::Approx(2.470385722).epsilon(1e-6));
    for (double th2 : {1.0, 2.0, 4.0}) {
        double c = 2.0 * th2;
        double t = solve_t2(th2);
        auto f = [&](double x) { return (c - x) * std::log((c - x) / c) + x; };
        CHECK(std::fabs(f(t) - 1.0) < 1e-7);
        check_infimum_flip(t, 1.0, f);
        CHECK(t < c);
    }
    CHECK_THROWS_AS(solve_t2(0.5), std::invalid_argument);  // sup of the condition is 2*theta2 = 1
    CHECK_THROWS_AS(solve_t2(0.0), std::invalid_argument);
}

TEST_CASE("solve_t3 root, endpoint and infeasible branches") {
    // empty domain: 2*theta1 - 4*theta2 - 2*t1 < 0
    double t1v = solve_t1(2.0);
    CHECK_FALSE(solve_t3(5.0, 2.0, t1v).has_value());

    // interior root at the Table-1 scale
    auto t3v = solve_t3(12.63, 2.0, t1v);
    REQUIRE(t3v.has_value());
    CHECK(*t3v == doctest::Approx(2.021219256).epsilon(1e-6));
    double c = 4.0 * 2.0 + 2.0 * t1v;
    auto cond = [&](double t) { return chernoff_gap(c, 2.0 * 12.63 - t); };
    CHECK(std::fabs(cond(*t3v) - 2.0) < 1e-7);
    CHECK(cond(*t3v - 1e-6) > 2.0);  // supremum: holds below, fails above
    CHECK(cond(*t3v + 1e-6) < 2.0);
}

TEST_CASE("solve_t4 is infeasible whenever theta1 > 4*theta2 - 2*t2") {
    double t2v = solve_t2(2.0);
    CHECK_FALSE(solve_t4(12.63, 2.0, t2v).has_value());
    CHECK_FALSE(solve_t4(8.0, 2.0, t2v).has_value());
    // near the mean the exponent cannot reach 2 either
    double t2v5 = solve_t2(5.0);
    CHECK_FALSE(solve_t4(10.5, 5.0, t2v5).has_value());
}

TEST_CASE("solve_eta dense regime") {
    CHECK(solve_eta(10.0, 1.0) == doctest::Approx(3.894216940).epsilon(1e-6));
    double s = 10.0 + 1.0 - 2.0;
    auto f = [&](double t) { return (s - t) * std::log((s - t) / s) + t; };
    double eta = solve_eta(10.0, 1.0);
    CHECK(std::fabs(f(eta) - 1.0) < 1e-7);
    check_infimum_flip(eta, 1.0, f);
    CHECK(solve_eta(4.0, 1.0) > 0.0);  // condition value 0 at t = 0
    CHECK_THROWS_AS(solve_eta(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("solve_eta sparse regime") {
    // (18 - t) ln((18 - t)/18) + t = 2
    double eta = solve_eta(10.0, 0.5);
    CHECK(eta == doctest::Approx(7.788433880).epsilon(1e-6));
    double s = 2.0 * 10.0 - 2.0;
    auto f = [&](double t) { return (s - t) * std::log((s - t) / s) + t; };
    CHECK(std::fabs(f(eta) - 2.0) < 1e-7);
    CHECK_THROWS_AS(solve_eta(1.5, 0.5), std::invalid_argument);
}

TEST_CASE("eta increases with theta1 + theta2 in the dense regime") {
    double prev = 0.0;
    for (double s = 4.0; s <= 20.0; s += 1.0) {
        double eta = solve_eta(s - 1.0, 1.0);  // theta1 + theta2 = s
        CHECK(eta > prev);
        prev = eta;
    }
}

TEST_CASE("compute_E_T and compute_epsilon closed forms") {
    const int n = 1000;
    double eta = solve_eta(10.0, 1.0);
    double et = compute_E_T(10.0, 1.0, eta, n);
    CHECK(et == doctest::Approx((9.0 - eta) * std::log(1000.0) / 1000.0).epsilon(1e-12));
    CHECK(et == doctest::Approx(0.0352695).epsilon(1e-4));

    // at theta1+theta2-2-eta = 2*theta2 the log term collapses
    // and epsilon = -(theta1-theta2-2-eta)
    double a = 2.0 * 1.0;  // pretend the pruned mean sits at 2*theta2
    CHECK(chernoff_gap(a, a) == doctest::Approx(0.0));

    double eps = compute_epsilon(10.0, 1.0, eta);
    double av = 10.0 + 1.0 - 2.0 - eta;
    CHECK(eps == doctest::Approx(av * std::log(av / 2.0) - (10.0 - 1.0 - 2.0 - eta)).epsilon(1e-10));

    // sparse-regime epsilon against an independent transcription
    double eta6 = solve_eta(4.0, 0.8);
    double a6 = 0.5 * (2.0 * 4.0 - 2.0 - eta6);
    double expected = a6 * std::log(a6 / (2.0 * 0.8)) - (a6 - 2.0 * 0.8);
    CHECK(compute_epsilon(4.0, 0.8, eta6) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("solve_R branches") {
    double t1v = solve_t1(1.0);
    // empty domain
    CHECK_FALSE(solve_R(3.3, 1.0, t1v).has_value());

    // interior root, verified against the condition
    auto r = solve_R(8.0, 1.0, t1v);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(1.051346238).epsilon(1e-6));
    CHECK(*r > 0.0);
    CHECK(*r < 2.0);
    double c = 2.0 + t1v;
    auto cond = [&](double x) { return chernoff_gap(c, 9.0 - x); };
    CHECK(std::fabs(cond(*r) - 1.0) < 1e-7);
    CHECK(cond(*r - 1e-6) > 1.0);
    CHECK(cond(*r + 1e-6) < 1.0);
    // condition value is maximal at r = 0 and shrinks toward the domain top
    CHECK(cond(0.0) > cond(*r));

    // condition holds through the whole domain: clamped to its sup
    auto r12 = solve_R(12.0, 1.0, t1v);
    REQUIRE(r12.has_value());
    CHECK(*r12 == doctest::Approx(2.0));
}

TEST_CASE("min_theta1_unsupervised reproduces the frontier table") {
    CHECK(min_theta1_unsupervised(1.0) == doctest::Approx(8.96).epsilon(0.006));
    CHECK(min_theta1_unsupervised(2.0) == doctest::Approx(12.63).epsilon(0.006));
    CHECK(min_theta1_unsupervised(3.0) == doctest::Approx(15.9).epsilon(0.006));
    CHECK(min_theta1_unsupervised(4.0) == doctest::Approx(18.98).epsilon(0.006));
    CHECK(min_theta1_unsupervised(5.0) == doctest::Approx(21.93).epsilon(0.006));
}

TEST_CASE("min_theta1_unsupervised minus theta2 grows with theta2") {
    double prev = -1.0;
    for (double th2 = 1.0; th2 <= 5.0; th2 += 1.0) {
        double gap = min_theta1_unsupervised(th2) - th2;
        CHECK(gap > prev);
        prev = gap;
    }
}

TEST_CASE("min_gap_active boundary and frontier comparison") {
    double b2 = min_gap_active(2.0) + 2.0;
    CHECK(b2 > 11.55);
    CHECK(b2 < 11.7);
    for (double th2 : {2.0, 3.0, 4.0, 5.0})
        CHECK(min_gap_active(th2) + th2 < min_theta1_unsupervised(th2));
    // boundary theta1 increases with theta2
    double prev = 0.0;
    for (double th2 = 1.0; th2 <= 5.0; th2 += 0.5) {
        double b = min_gap_active(th2) + th2;
        CHECK(b > prev);
        prev = b;
    }
    CHECK(min_gap_active(4.0) + 4.0 < 18.98);
}

TEST_CASE("sbm_min_a closed form") {
    CHECK(sbm_min_a(2.0) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(sbm_min_a(2.0) / 2.0 == doctest::Approx(4.0));
    CHECK(sbm_min_a(4.0) / 2.0 == doctest::Approx(5.83).epsilon(0.002));
    CHECK(sbm_min_a(8.0) / 2.0 == doctest::Approx(9.0));
    CHECK(sbm_min_a(0.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(sbm_min_a(-1.0), std::invalid_argument);
}

TEST_CASE("poisson_component_approx closed forms") {
    auto pa = poisson_component_approx(10, 0.2);
    CHECK(pa.lambda == doctest::Approx(10.0 * std::pow(0.8, 10)).epsilon(1e-12));
    CHECK(pa.lambda == doctest::Approx(1.0737).epsilon(1e-4));
    CHECK(pa.tv_bound == doctest::Approx(pa.lambda - 9.0 * std::pow(0.75, 10)).epsilon(1e-12));
    CHECK(pa.tv_bound == doctest::Approx(0.5669).epsilon(1e-3));

    auto pz = poisson_component_approx(7, 0.0);
    CHECK(pz.lambda == doctest::Approx(7.0));
    CHECK(pz.tv_bound == doctest::Approx(1.0));

    CHECK_THROWS_AS(poisson_component_approx(10, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(poisson_component_approx(10, -0.1), std::invalid_argument);
}

TEST_CASE("poisson tv bound vanishes along tau = R*log(n)/n") {
    const double R = 1.0;
    double prev = 1e9;
    for (int n : {1000, 10000, 100000}) {
        double tau = R * std::log(static_cast<double>(n)) / n;
        double b = poisson_component_approx(n, tau).tv_bound;
        CHECK(b < prev);
        prev = b;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("s2_budget exact integer arithmetic") {
    CHECK(s2_budget(16, 1, 1, 0.5) == 6);    // 2 + 4 + 0
    CHECK(s2_budget(1024, 5, 7, 0.5) == 32); // 2 + 10 + 4*5
    // first term is exactly 1 at delta = 1
    CHECK(s2_budget(2, 1, 1, 1.0) == 1 + 1);
    CHECK_THROWS_AS(s2_budget(16, 1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(s2_budget(16, 1, 1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(s2_budget(16, 0, 1, 0.5), std::invalid_argument);
}

TEST_CASE("component_count_bound closed form") {
    CHECK(component_count_bound(1000, 1.0) == doctest::Approx(1.5 * std::sqrt(1000.0) + 2.0));
    CHECK(component_count_bound(1000, 1.0) == doctest::Approx(49.43).epsilon(1e-3));
    CHECK(component_count_bound(1000, 2.0) == doctest::Approx(3.5));
    CHECK(component_count_bound(1000, 0.5) == doctest::Approx(268.7).epsilon(1e-3));
    CHECK_THROWS_AS(component_count_bound(1000, 0.0), std::invalid_argument);
}

TEST_CASE("solve_threshold_set is internally consistent") {
    auto ts = solve_threshold_set(10.0, 2.0, 1000);
    CHECK(ts.regime == Regime::Dense);
    CHECK(ts.t1 == doctest::Approx(solve_t1(2.0)));
    CHECK(ts.t2 == doctest::Approx(solve_t2(2.0)));
    CHECK(ts.E_L < ts.E_R);
    CHECK(ts.E_T == doctest::Approx(compute_E_T(10.0, 2.0, ts.eta, 1000)));
    CHECK(ts.eta > 0.0);
}
