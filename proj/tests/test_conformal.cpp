#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypmet/boundary_sup.hpp"
#include "hypmet/closed_forms.hpp"
#include "hypmet/conformal.hpp"
#include "hypmet/numeric.hpp"

using namespace hypmet;

TEST_CASE("cayley map frozen values and involution") {
    MapSpec cay = MapSpec::cayley_ball_to_halfspace(2);
    CHECK(dist(apply_map(cay, Point(0, 0)), Point(0, 1)) <= 1e-15);
    CHECK(dist(apply_map(cay, Point(0.5, 0)), Point(0.8, 0.6)) <= 1e-15);
    MapSpec cay_inv = MapSpec::cayley_halfspace_to_ball(2);
    CHECK(dist(apply_map(cay_inv, Point(0.8, 0.6)), Point(0.5, 0)) <= 1e-14);
    CHECK(dist(apply_inverse(cay, apply_map(cay, Point(0.3, -0.4))), Point(0.3, -0.4)) <= 1e-14);
    CHECK_THROWS_AS(apply_map(cay, Point(2, 0)), std::invalid_argument);
}

TEST_CASE("linear dilatation of Moebius maps is 1") {
    std::vector<double> rot = {std::cos(0.5), -std::sin(0.5), std::sin(0.5), std::cos(0.5)};
    std::vector<std::pair<MapSpec, Point>> cases = {
        {MapSpec::identity(2), Point(0.3, 0.4)},
        {MapSpec::ball_automorphism(Point(0.3, 0.2)), Point(0.5, 0)},
        {MapSpec::ball_automorphism(Point(0.5, 0), rot), Point(-0.2, 0.3)},
        {MapSpec::cayley_ball_to_halfspace(2), Point(0.5, 0)},
        {MapSpec::cayley_halfspace_to_ball(2), Point(0.5, 1)},
    };
    for (const auto& [f, z] : cases) {
        CAPTURE(f.descriptor());
        DilatationEstimate est = linear_dilatation(f, z);
        CHECK(est.H >= 1.0);
        CHECK(est.H == doctest::Approx(1.0).epsilon(0.02));
        CHECK(est.trend_ok);
        CHECK(est.ratios.size() == 3);
    }
    // conformal but non-Moebius: the square map
    DilatationEstimate sq = linear_dilatation(MapSpec::planar_square(), Point(1, 0.1));
    CHECK(sq.H == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("linear dilatation of the radial stretch is K") {
    DilatationEstimate est = linear_dilatation(MapSpec::radial_stretch(2.0, 2), Point(0.5, 0));
    CHECK(est.H == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::abs(est.H - 2.0) <= 0.1);
    // origin excluded from the source domain
    CHECK_THROWS_AS(linear_dilatation(MapSpec::radial_stretch(2.0, 2), Point(0, 0)),
                    std::invalid_argument);
    // sphere exiting the source domain
    CHECK_THROWS_AS(linear_dilatation(MapSpec::identity(2), Point(0.999, 0)),
                    std::invalid_argument);
}

TEST_CASE("moebius j and k distortion chains") {
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    DistortionOptions opt;
    opt.samples = 1000;
    opt.k_samples = 150;

    VerificationOutcome cay = check_mobius_j_k_distortion(MapSpec::cayley_ball_to_halfspace(2),
                                                          ball, opt);
    CHECK(cay.violations == 0);
    CHECK(cay.checked == 2 * 1000 + 2 * 150);

    VerificationOutcome sig =
        check_mobius_j_k_distortion(MapSpec::ball_automorphism(Point(0.5, 0)), ball, opt);
    CHECK(sig.violations == 0);

    DistortionOptions id_opt;
    id_opt.samples = 200;
    id_opt.k_samples = 20;
    VerificationOutcome idc = check_mobius_j_k_distortion(MapSpec::identity(2), ball, id_opt);
    CHECK(idc.violations == 0);

    CHECK_THROWS_AS(check_mobius_j_k_distortion(MapSpec::radial_stretch(2.0, 2), ball, opt),
                    std::invalid_argument);
}

TEST_CASE("s Moebius bound") {
    // single frozen configuration: x = 0, y = (0.5, 0)
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    SupSolverConfig sup;
    double s = s_metric(ball, Point(0, 0), Point(0.5, 0), sup).value;
    CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-9)); // best z = (1,0): 0.5/1.5
    double bound = 2 * s / (1 + s * s);
    CHECK(bound == doctest::Approx(0.6).epsilon(1e-8));
    CHECK(s <= bound);

    DistortionOptions opt;
    opt.samples = 2000;
    CHECK(check_s_mobius_bound(MapSpec::cayley_ball_to_halfspace(2), opt).violations == 0);
    opt.samples = 1000;
    CHECK(check_s_mobius_bound(MapSpec::ball_automorphism(Point(0.3, 0.2)), opt).violations == 0);
}

TEST_CASE("p Moebius bounds, three parts") {
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    Domain half = Domain::half_space(2);
    MapSpec cay = MapSpec::cayley_ball_to_halfspace(2);

    // frozen window example: p_B(0, (0.5,0)) = 0.5/sqrt(0.25+2) = 1/3
    double p_src = p_function(ball, Point(0, 0), Point(0.5, 0)).value;
    CHECK(p_src == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    double p_img = p_function(half, apply_map(cay, Point(0, 0)), apply_map(cay, Point(0.5, 0))).value;
    CHECK(p_img == doctest::Approx(0.5).epsilon(1e-12)); // th(rho_H/2) with rho = log 3
    CHECK(p_img >= p_src);
    CHECK(p_img <= 2 * p_src / (1 + p_src * p_src));

    DistortionOptions opt;
    opt.samples = 2000;
    CHECK(check_p_mobius_bounds(cay, 1, opt).violations == 0);
    CHECK(check_p_mobius_bounds(MapSpec::ball_automorphism(Point(0.3, 0.2)), 2, opt).violations ==
          0);
    CHECK(check_p_mobius_bounds(MapSpec::cayley_halfspace_to_ball(2), 3, opt).violations == 0);
    CHECK_THROWS_AS(check_p_mobius_bounds(cay, 2, opt), std::invalid_argument);
    CHECK_THROWS_AS(check_p_mobius_bounds(cay, 4, opt), std::invalid_argument);
}

TEST_CASE("quasiregular Hoelder bound for the radial stretch") {
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    SupSolverConfig sup;
    // K = 2 spot check: x = (0.25,0), y = (0.5,0)
    MapSpec f = MapSpec::radial_stretch(2.0, 2);
    Point fx = apply_map(f, Point(0.25, 0));
    Point fy = apply_map(f, Point(0.5, 0));
    CHECK(dist(fx, Point(0.5, 0)) <= 1e-15);
    CHECK(fy[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    double s_src = s_metric(ball, Point(0.25, 0), Point(0.5, 0), sup).value;
    double lhs = s_metric(ball, fx, fy, sup).value;
    double rhs = std::sqrt(4.0) * std::sqrt(2 * s_src / (1 + s_src * s_src));
    CHECK(lhs <= rhs);

    DistortionOptions opt;
    opt.samples = 2000;
    CHECK(check_qr_holder_bound(2.0, opt).violations == 0);
    // K = 1 reduces to the Moebius bound with factor 1
    CHECK(check_qr_holder_bound(1.0, opt).violations == 0);
}

TEST_CASE("empirical bilipschitz constants") {
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    CHECK(empirical_bilipschitz_constant(MapSpec::identity(2), MetricKind::J, ball, 200, 42) ==
          doctest::Approx(1.0).epsilon(1e-12));
    double L = empirical_bilipschitz_constant(MapSpec::ball_automorphism(Point(0.5, 0)),
                                              MetricKind::J, ball, 1000, 42);
    CHECK(L <= 2.0 + 1e-6);
    CHECK(L > 1.0);

    // radial stretch, triangular ratio metric on the punctured ball:
    // dilatation stays below the squared bilipschitz estimate
    MapSpec stretch = MapSpec::radial_stretch(2.0, 2);
    Domain pball = Domain::punctured_ball(Point(0, 0), 1.0);
    double Ls = empirical_bilipschitz_constant(stretch, MetricKind::S, pball, 500, 42);
    CHECK(Ls > 1.0);
    SplitMix64 rng(4711);
    for (int i = 0; i < 20; ++i) {
        double ang = rng.uniform(0, 2 * kPi);
        double rad = rng.uniform(0.2, 0.8);
        DilatationEstimate est =
            linear_dilatation(stretch, Point(rad * std::cos(ang), rad * std::sin(ang)));
        CHECK(est.H <= Ls * Ls + 0.05);
    }
}
