#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hypmet/domain.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/point.hpp"
#include "hypmet/rng.hpp"
#include "hypmet/sampling.hpp"

using namespace hypmet;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

std::vector<Domain> all_variants() {
    return {
        Domain::ball(Point(0, 0), 1.0),
        Domain::half_space(2),
        Domain::punctured_space(Point(0, 0)),
        Domain::strip(),
        Domain::convex_polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}),
        Domain::koch(4),
        Domain::ball_complement(Point(0, 0), 1.0),
        Domain::punctured_ball(Point(0, 0), 1.0),
        Domain::disk_with_slit(),
    };
}
} // namespace

TEST_CASE("boundary_distance closed forms") {
    CHECK(Domain::ball(Point(0, 0), 1.0).boundary_distance(Point(0.5, 0)) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Domain::half_space(2).boundary_distance(Point(3, 2)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(Domain::punctured_space(Point(0, 0)).boundary_distance(Point(3, 4)) ==
          doctest::Approx(5.0).epsilon(1e-15));
    CHECK(Domain::strip().boundary_distance(Point(7, 0.25)) ==
          doctest::Approx(0.75).epsilon(1e-15));

    Domain sq = Domain::convex_polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    CHECK(sq.boundary_distance(Point(0.5, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sq.boundary_distance(Point(0.1, 0.3)) == doctest::Approx(0.1).epsilon(1e-15));

    CHECK(Domain::ball_complement(Point(0, 0), 1.0).boundary_distance(Point(3, 4)) ==
          doctest::Approx(4.0).epsilon(1e-15));
    CHECK(Domain::punctured_ball(Point(0, 0), 1.0).boundary_distance(Point(0.1, 0)) ==
          doctest::Approx(0.1).epsilon(1e-15));
    CHECK(Domain::disk_with_slit().boundary_distance(Point(0.5, -0.2)) ==
          doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("boundary_distance errors") {
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    CHECK_THROWS_AS(ball.boundary_distance(Point(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ball.boundary_distance(Point(0.1, 0.1, 0.1)), std::invalid_argument);
    CHECK_THROWS_AS(Domain::half_space(2).boundary_distance(Point(0, -1)), std::invalid_argument);
    // boundary points are in the closure: distance 0
    CHECK(ball.boundary_distance(Point(1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("domain_diameter") {
    CHECK(Domain::ball(Point(0, 0), 1.0).diameter() == doctest::Approx(2.0));
    CHECK(Domain::strip().diameter() == kInf);
    CHECK(Domain::half_space(2).diameter() == kInf);
    Domain sq = Domain::convex_polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
    CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("angle_at examples") {
    CHECK(angle_at(Point(1, 0), Point(0, 0), Point(0, 1)) ==
          doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(angle_at(Point(0, 0), Point(1, 0), Point(2, 0)) == doctest::Approx(kPi).epsilon(1e-15));
    // oracle: difference of the two elevation angles seen from z
    double expected = std::atan(3.0 / std::sqrt(3.0)) - std::atan(1.0 / std::sqrt(3.0));
    CHECK(expected == doctest::Approx(kPi / 6).epsilon(1e-15));
    CHECK(angle_at(Point(0, 1), Point(std::sqrt(3.0), 0), Point(0, 3)) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK_THROWS_AS(angle_at(Point(1, 0), Point(1, 0), Point(0, 1)), std::invalid_argument);
}

TEST_CASE("angle_at symmetry is exact") {
    SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Point x(rng.uniform(-2, 2), rng.uniform(-2, 2));
        Point y(rng.uniform(-2, 2), rng.uniform(-2, 2));
        Point z(rng.uniform(-2, 2), rng.uniform(-2, 2));
        if (z == x || z == y) continue;
        CHECK(angle_at(x, z, y) == angle_at(y, z, x));
        double a = angle_at(x, z, y);
        CHECK(a >= 0);
        CHECK(a <= kPi);
    }
}

TEST_CASE("boundary_distance is 1-Lipschitz") {
    for (const Domain& G : all_variants()) {
        CAPTURE(G.descriptor());
        SplitMix64 rng(hash_str(G.descriptor()));
        for (int i = 0; i < 10000; ++i) {
            Point a = sample_point_in(G, rng);
            Point b = sample_point_in(G, rng);
            double lhs = std::abs(G.boundary_distance(a) - G.boundary_distance(b));
            CHECK(lhs <= dist(a, b) + 1e-12);
        }
    }
}

TEST_CASE("boundary_param points lie on the boundary") {
    for (const Domain& G : all_variants()) {
        CAPTURE(G.descriptor());
        SplitMix64 rng(hash_str(G.descriptor()) ^ 99);
        Point x = sample_point_in(G, rng);
        Point y = sample_point_in(G, rng);
        BoundaryParam bp = boundary_param(G, x, y);
        CHECK(!bp.pieces.empty());
        for (const BoundaryPiece& piece : bp.pieces) {
            for (int k = 0; k <= 16; ++k) {
                Point z = piece.eval(k / 16.0);
                CHECK(G.boundary_distance(z) <= 1e-10);
            }
        }
    }
}

TEST_CASE("polygon convexity flag matches brute-force orientation test") {
    auto brute_convex_ccw = [](const std::vector<Point>& v) {
        std::size_t n = v.size();
        double area2 = 0;
        bool convex = true;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            const Point& c = v[(i + 2) % n];
            double cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
            if (cr < -1e-12) convex = false;
            area2 += a[0] * b[1] - b[0] * a[1];
        }
        return convex && area2 > 0;
    };

    std::vector<Point> square{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
    CHECK(brute_convex_ccw(square));
    CHECK(Domain::convex_polygon(square).convex());

    std::vector<Point> dart{Point(0, 0), Point(2, 0), Point(1, 0.2), Point(1, 2)};
    CHECK(!brute_convex_ccw(dart));
    CHECK_THROWS_AS(Domain::convex_polygon(dart), std::invalid_argument);

    std::vector<Point> cw{Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 0)};
    CHECK(!brute_convex_ccw(cw));
    CHECK_THROWS_AS(Domain::convex_polygon(cw), std::invalid_argument);

    // convex flag true exactly for HalfSpace, Ball, Strip, ConvexPolygon
    for (const Domain& G : all_variants()) {
        bool expected = G.kind() == DomainKind::HalfSpace || G.kind() == DomainKind::Ball ||
                        G.kind() == DomainKind::Strip || G.kind() == DomainKind::ConvexPolygon;
        CHECK(G.convex() == expected);
    }
}

TEST_CASE("koch polygon structure") {
    for (int depth : {0, 1, 2, 4}) {
        Domain k = Domain::koch(depth);
        CHECK(k.vertices().size() == 3u * (1u << (2 * depth))); // 3 * 4^depth
        CHECK(k.contains(Point(0, 0)));
        CHECK(!k.convex());
        CHECK(k.bounded());
    }
    Domain k0 = Domain::koch(0);
    Domain k1 = Domain::koch(1);
    CHECK(k1.diameter() > k0.diameter());
    CHECK(k1.diameter() < 3.0);
    // the spike of the bottom edge points down, away from the interior
    bool has_lower = false;
    for (const Point& v : k1.vertices())
        if (v[1] < -0.9) has_lower = true;
    CHECK(has_lower);
}

TEST_CASE("segment_hits_boundary") {
    Domain punct = Domain::punctured_space(Point(0, 0));
    CHECK(punct.segment_hits_boundary(Point(0.5, 0), Point(-0.5, 0)));
    CHECK(!punct.segment_hits_boundary(Point(0.5, 0.1), Point(-0.5, 0.1)));

    Domain slit = Domain::disk_with_slit();
    CHECK(slit.segment_hits_boundary(Point(0.5, 0.2), Point(0.5, -0.2)));
    CHECK(!slit.segment_hits_boundary(Point(-0.5, 0.2), Point(-0.5, -0.2)));

    Domain bc = Domain::ball_complement(Point(0, 0), 1.0);
    CHECK(bc.segment_hits_boundary(Point(-2, 0), Point(2, 0)));
    CHECK(!bc.segment_hits_boundary(Point(-2, 1.5), Point(2, 1.5)));

    // chords of convex domains never hit the boundary
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    CHECK(!ball.segment_hits_boundary(Point(-0.9, 0), Point(0.9, 0)));
}

TEST_CASE("2-plane reduction for ball in R^3") {
    Domain b3 = Domain::ball(Point::zero(3), 1.0);
    Point x(0.2, 0.1, -0.3), y(-0.4, 0.25, 0.1);
    BoundaryParam bp = boundary_param(b3, x, y);
    REQUIRE(bp.pieces.size() == 1u);
    const BoundaryPiece& arc = bp.pieces.front();
    CHECK(arc.kind == BoundaryPiece::Kind::Arc);
    Point n(x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]);
    for (int k = 0; k <= 32; ++k) {
        Point z = arc.eval(k / 32.0);
        CHECK(z.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(dot(z, n)) <= 1e-10 * n.norm()); // z stays in span{x,y}
    }
}

TEST_CASE("halfspace boundary param truncation") {
    Domain h = Domain::half_space(2);
    Point x(0, 1), y(0, 3);
    double R = truncation_radius(h, x, y);
    CHECK(R == doctest::Approx(64.0 * (2.0 + 1.0 + 3.0)));
    BoundaryParam bp = boundary_param(h, x, y);
    REQUIRE(bp.pieces.size() == 1u);
    CHECK(bp.pieces[0].length() == doctest::Approx(2 * R).epsilon(1e-12));
}

TEST_CASE("domain text descriptors") {
    CHECK(Domain::ball(Point(0, 0), 1.0).descriptor() == "ball:c=0,0;r=1");
    CHECK(Domain::half_space(2).descriptor() == "halfspace:n=2");
    CHECK(Domain::strip().descriptor() == "strip");
    CHECK(Domain::koch(6).descriptor() == "koch:depth=6");
    CHECK(Domain::punctured_space(Point(0, 0)).descriptor() == "punctured:p=0,0");
}

TEST_CASE("point dimension guards") {
    CHECK_THROWS_AS(Point::from_vector({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Point(1, 2) + Point(1, 2, 3), std::invalid_argument);
    CHECK(Point(1, 2, 3).dim() == 3);
    CHECK(Point(3, 4).norm() == doctest::Approx(5.0));
}
