#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypmet/boundary_sup.hpp"
#include "hypmet/closed_forms.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/special_domains.hpp"

using namespace hypmet;

TEST_CASE("strip constant") {
    // independent oracle: dense scan of the ratio objective
    double scan_min = 1e300;
    for (int i = 1; i < 2000000; ++i) {
        double t = i * 5e-7;
        scan_min = std::min(scan_min, strip_ratio_objective(t));
    }
    double c = strip_constant();
    CHECK(std::abs(c - scan_min) <= 1e-8);
    CHECK(std::abs(c - 0.73707) <= 1e-4); // reference constant
    CHECK(c > 1.0 / std::sqrt(2.0));      // 0.707107...

    CHECK(strip_ratio_objective(0.5) ==
          doctest::Approx(std::asin(0.5) * std::sqrt(0.5) / 0.5).epsilon(1e-15));
    CHECK(strip_ratio_objective(0.5) == doctest::Approx(0.7404804896).epsilon(1e-9));
    CHECK(strip_ratio_objective(1e-8) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("strip pair formulas vs solvers") {
    Domain S = Domain::strip();
    SupSolverConfig cfg;
    for (int i = 1; i <= 9; ++i) {
        double t = 0.1 * i;
        Point a(0, t), b(0, -t);
        CHECK(v_metric(S, a, b, cfg).value == doctest::Approx(std::asin(t)).epsilon(1e-8));
        CHECK(p_function(S, a, b).value ==
              doctest::Approx(t / std::sqrt(t * t + (1 - t) * (1 - t))).epsilon(1e-14));
    }
}

TEST_CASE("H(delta) on the ball passes at delta = 0.45") {
    Domain B = Domain::ball(Point(0, 0), 1.0);
    auto trials = h_delta_check(B, 0.45, 1000, 42);
    CHECK(trials.size() == 1000);
    for (const auto& t : trials) {
        CAPTURE(t.z[0]);
        CAPTURE(t.r);
        CHECK(t.pass);
        REQUIRE(t.has_witness);
        // verify the witnessed inclusion independently of the search
        CHECK(dist(t.w, t.z) + 0.45 * t.r <= t.r + 1e-10);
        CHECK(B.exterior_clearance(t.w) >= 0.45 * t.r - 1e-10);
        CHECK(t.margin >= 0);
    }
}

TEST_CASE("delta above 1/2 cannot be witnessed on the ball") {
    Domain B = Domain::ball(Point(0, 0), 1.0);
    auto trials = h_delta_check(B, 0.55, 100, 42);
    long fails = 0;
    for (const auto& t : trials)
        if (!t.pass) ++fails;
    CHECK(fails == 100); // max feasible radius ratio at a sphere point is 1/2
}

TEST_CASE("disk with slit fails H(delta)") {
    Domain G = Domain::disk_with_slit();
    auto trials = h_delta_check(G, 0.2, 500, 42);
    long fails = 0;
    bool slit_fail = false;
    for (const auto& t : trials) {
        if (t.pass) continue;
        ++fails;
        if (std::abs(t.z[1]) < 1e-12 && t.z[0] >= 0 && t.z[0] <= 1 && t.r < 0.4) slit_fail = true;
    }
    CHECK(fails > 0);
    CHECK(slit_fail); // witnesses of failure at the slit, small radius
}

TEST_CASE("half space passes for small delta") {
    Domain H = Domain::half_space(2);
    auto trials = h_delta_check(H, 0.01, 200, 42, 10.0);
    for (const auto& t : trials) CHECK(t.pass);
    // and in fact at any delta < 1/2
    auto trials2 = h_delta_check(H, 0.49, 200, 42, 10.0);
    for (const auto& t : trials2) CHECK(t.pass);
}

TEST_CASE("nonlinearity estimate on the snowflake") {
    Domain k5 = Domain::koch(5);
    Domain k6 = Domain::koch(6);
    double d5 = nonlinearity_delta_estimate(k5, 600, 7);
    double d6 = nonlinearity_delta_estimate(k6, 600, 7);
    CAPTURE(d5);
    CAPTURE(d6);
    CHECK(d5 > 0);
    CHECK(d5 < 1);
    CHECK(d6 > 0);
    CHECK(d6 < 1);
    CHECK(std::abs(d5 - d6) <= 0.1 * std::max(d5, d6)); // stable across depth
}

TEST_CASE("nonlinearity estimate collapses on a square") {
    Domain sq = Domain::convex_polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    double few = nonlinearity_delta_estimate(sq, 300, 7);
    double many = nonlinearity_delta_estimate(sq, 4000, 7);
    CHECK(many <= few + 1e-12); // min over a superset of trials
    CHECK(many < 0.2);          // lines along the edges kill the constant
    Domain k6 = Domain::koch(6);
    CHECK(nonlinearity_delta_estimate(k6, 600, 7) > many);
}

TEST_CASE("estimator argument guards") {
    CHECK_THROWS_AS(nonlinearity_delta_estimate(Domain::strip(), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_delta_check(Domain::ball(Point(0, 0), 1.0), 0.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(h_delta_check(Domain::ball(Point::zero(3), 1.0), 0.3, 10, 1),
                    std::invalid_argument);
}
