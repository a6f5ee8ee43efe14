#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hypmet/point.hpp"
#include "hypmet/rng.hpp"

namespace hypmet {

enum class DomainKind {
    HalfSpace,      // x_n > 0
    Ball,           // |x - c| < r
    PuncturedSpace, // R^n \ {p}
    Strip,          // planar, |y| < 1
    ConvexPolygon,  // planar, CCW, convex
    KochPolygon,    // planar snowflake polygon at finite depth
    BallComplement, // |x - c| > r
    PuncturedBall,  // B(c,r) \ {c}
    DiskWithSlit,   // B^2 \ [0,1] (unit disk minus the slit [0,1] x {0})
};

/// Canonical Euclidean domains with closed-form boundary distance, a
/// boundary parametrization for sup solvers, and membership predicates.
/// Immutable after construction.
class Domain {
public:
    static Domain half_space(int n = 2);
    static Domain ball(const Point& center, double radius);
    static Domain punctured_space(const Point& puncture);
    static Domain strip();
    static Domain convex_polygon(std::vector<Point> vertices_ccw);
    static Domain koch(int depth);
    static Domain ball_complement(const Point& center, double radius);
    static Domain punctured_ball(const Point& center, double radius);
    static Domain disk_with_slit();

    DomainKind kind() const { return kind_; }
    int dim() const { return n_; }
    bool convex() const { return convex_; }
    bool bounded() const { return diameter_ < std::numeric_limits<double>::infinity(); }

    /// sup_{a,b in G} |a-b|; +infinity for unbounded variants.
    double diameter() const { return diameter_; }

    /// Characteristic length for sampling strata and tolerances.
    double scale() const { return scale_; }

    /// Strict interior membership.
    bool contains(const Point& x) const;
    bool in_closure(const Point& x, double tol = 1e-9) const;

    /// inf_{z in boundary} |x-z|. Requires x in the closure of G.
    double boundary_distance(const Point& x) const;

    /// Distance from x to the closure of G (0 if x is in the closure).
    /// Used by the exterior-ball condition checks.
    double exterior_clearance(const Point& x) const;

    /// Closest boundary point to x (x in G).
    Point nearest_boundary_point(const Point& x) const;

    /// True when the open segment (x,y) meets the boundary. For x,y in G
    /// this is the v = pi configuration.
    bool segment_hits_boundary(const Point& x, const Point& y) const;

    /// Text form matching the CLI domain grammar.
    std::string descriptor() const;

    // Variant data accessors (valid per kind).
    const Point& center() const { return center_; }
    double radius() const { return radius_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    int koch_depth() const { return koch_depth_; }

private:
    Domain() = default;

    DomainKind kind_ = DomainKind::Ball;
    int n_ = 2;
    bool convex_ = false;
    double diameter_ = 0;
    double scale_ = 1;
    Point center_;        // Ball / PuncturedSpace puncture / BallComplement / PuncturedBall
    double radius_ = 0;
    std::vector<Point> vertices_; // polygon variants, CCW
    int koch_depth_ = 0;

    double polygon_boundary_distance(const Point& x) const;
    bool polygon_contains(const Point& x) const;
};

// ---------------------------------------------------------------------------
// Boundary parametrization

struct BoundaryPiece {
    enum class Kind { Segment, Arc, SinglePoint };
    Kind kind = Kind::Segment;

    Point a, b;                // Segment endpoints; SinglePoint uses a
    Point center, u_axis, v_axis; // Arc: center + r(cos t * u + sin t * v)
    double radius = 0;
    double theta0 = 0, theta1 = 0;

    static BoundaryPiece segment(const Point& a, const Point& b);
    static BoundaryPiece arc(const Point& center, double radius, const Point& u,
                             const Point& v, double theta0, double theta1);
    static BoundaryPiece single_point(const Point& p);

    /// Evaluate at normalized parameter t in [0,1].
    Point eval(double t) const;
    double length() const;
};

struct BoundaryParam {
    std::vector<BoundaryPiece> pieces;
    double total_length() const;
};

/// Truncation radius for unbounded boundary pieces, measured from the
/// midpoint of [x,y].
double truncation_radius(const Domain& G, const Point& x, const Point& y);

/// 1-D boundary pieces over which the s/v suprema are searched. For Ball
/// and HalfSpace in n > 2 this is the cross-section in the 2-plane through
/// x, y and the center / the normal foot. `trunc_factor` scales the default
/// truncation radius (the harness doubles it for insensitivity checks).
BoundaryParam boundary_param(const Domain& G, const Point& x, const Point& y,
                             double trunc_factor = 1.0);

/// Position-free parametrization for boundary sampling (condition checks);
/// unbounded pieces are truncated at |t| <= r_cap around the origin foot.
BoundaryParam boundary_param_static(const Domain& G, double r_cap = 10.0);

/// Uniform-by-length boundary point (for Lipschitz/witness sampling).
Point sample_boundary_point(const Domain& G, SplitMix64& rng, double r_cap = 10.0);

// Planar segment helpers shared by polygon code and tests.
double point_segment_distance(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace hypmet
