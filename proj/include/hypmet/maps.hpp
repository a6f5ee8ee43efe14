#pragma once

#include <string>
#include <vector>

#include "hypmet/domain.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

enum class MapKind {
    BallAutomorphism,      // x -> R * sigma_a(x), Moebius B^n -> B^n
    CayleyBallToHalfspace, // inversion in S(-e_n, sqrt 2), B^n -> H^n
    CayleyHalfspaceToBall, // the same involution, H^n -> B^n
    RadialStretch,         // x -> |x|^{1/K - 1} x on B^n \ {0}, K-quasiconformal
    PlanarAnalyticSquare,  // z -> z^2 on a disk away from 0, conformal
};

/// Specification of a Moebius transformation or a canonical quasiconformal
/// test map. Value type; apply/invert are free functions.
struct MapSpec {
    MapKind kind = MapKind::BallAutomorphism;
    int n = 2;
    Point a;                      // BallAutomorphism parameter, |a| < 1
    std::vector<double> rotation; // optional n*n row-major orthogonal matrix
    double K = 1.0;               // RadialStretch dilatation

    static MapSpec identity(int n = 2);
    static MapSpec ball_automorphism(const Point& a);
    static MapSpec ball_automorphism(const Point& a, const std::vector<double>& rotation);
    static MapSpec cayley_ball_to_halfspace(int n = 2);
    static MapSpec cayley_halfspace_to_ball(int n = 2);
    static MapSpec radial_stretch(double K, int n = 2);
    static MapSpec planar_square();

    bool is_mobius() const {
        return kind == MapKind::BallAutomorphism || kind == MapKind::CayleyBallToHalfspace ||
               kind == MapKind::CayleyHalfspaceToBall;
    }
    double dilatation() const { return kind == MapKind::RadialStretch ? K : 1.0; }

    Domain source_domain() const;
    Domain image_domain() const;
    std::string descriptor() const;
};

/// Image of x under f. Throws if x is outside the source domain.
Point apply_map(const MapSpec& f, const Point& x);

/// Preimage of y under f.
Point apply_inverse(const MapSpec& f, const Point& y);

} // namespace hypmet
