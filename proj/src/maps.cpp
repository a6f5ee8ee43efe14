#include "hypmet/maps.hpp"

#include <cmath>
#include <stdexcept>

namespace hypmet {

namespace {

// sigma_a(x) = ((1-|a|^2)(x-a) - |x-a|^2 a) / (1 - 2<x,a> + |x|^2 |a|^2),
// the canonical Moebius automorphism of B^n with sigma_a(a) = 0 and
// sigma_a^{-1} = sigma_{-a}.
Point sigma(const Point& a, const Point& x) {
    double aa = a.norm_sq();
    double xx = x.norm_sq();
    double xa = dot(x, a);
    double denom = 1.0 - 2.0 * xa + xx * aa;
    if (denom <= 0) throw std::invalid_argument("sigma_a: point outside B^n");
    Point xma = x - a;
    Point num = (1.0 - aa) * xma - xma.norm_sq() * a;
    return (1.0 / denom) * num;
}

// Inversion in S(-e_n, sqrt 2); an involution exchanging B^n and H^n.
Point cayley(const Point& x) {
    int n = x.dim();
    Point c = Point::zero(n);
    c[n - 1] = -1;
    Point d = x - c;
    double dd = d.norm_sq();
    if (dd < 1e-300) throw std::invalid_argument("cayley: pole of the inversion");
    return c + (2.0 / dd) * d;
}

Point rotate(const std::vector<double>& R, const Point& x, bool transpose) {
    if (R.empty()) return x;
    int n = x.dim();
    if (static_cast<int>(R.size()) != n * n)
        throw std::invalid_argument("rotation matrix size mismatch");
    Point y = Point::zero(n);
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += (transpose ? R[j * n + i] : R[i * n + j]) * x[j];
        y[i] = s;
    }
    return y;
}

} // namespace

MapSpec MapSpec::identity(int n) {
    MapSpec f;
    f.kind = MapKind::BallAutomorphism;
    f.n = n;
    f.a = Point::zero(n);
    return f;
}

MapSpec MapSpec::ball_automorphism(const Point& a) {
    if (a.norm() >= 1) throw std::invalid_argument("ball_automorphism: |a| must be < 1");
    MapSpec f;
    f.kind = MapKind::BallAutomorphism;
    f.n = a.dim();
    f.a = a;
    return f;
}

MapSpec MapSpec::ball_automorphism(const Point& a, const std::vector<double>& rotation) {
    MapSpec f = ball_automorphism(a);
    f.rotation = rotation;
    return f;
}

MapSpec MapSpec::cayley_ball_to_halfspace(int n) {
    MapSpec f;
    f.kind = MapKind::CayleyBallToHalfspace;
    f.n = n;
    return f;
}

MapSpec MapSpec::cayley_halfspace_to_ball(int n) {
    MapSpec f;
    f.kind = MapKind::CayleyHalfspaceToBall;
    f.n = n;
    return f;
}

MapSpec MapSpec::radial_stretch(double K, int n) {
    if (!(K >= 1)) throw std::invalid_argument("radial_stretch: K must be >= 1");
    MapSpec f;
    f.kind = MapKind::RadialStretch;
    f.n = n;
    f.K = K;
    return f;
}

MapSpec MapSpec::planar_square() {
    MapSpec f;
    f.kind = MapKind::PlanarAnalyticSquare;
    f.n = 2;
    return f;
}

Domain MapSpec::source_domain() const {
    switch (kind) {
    case MapKind::BallAutomorphism:
    case MapKind::CayleyBallToHalfspace: return Domain::ball(Point::zero(n), 1.0);
    case MapKind::CayleyHalfspaceToBall: return Domain::half_space(n);
    case MapKind::RadialStretch: return Domain::punctured_ball(Point::zero(n), 1.0);
    case MapKind::PlanarAnalyticSquare: return Domain::ball(Point(1, 0), 0.5);
    }
    return Domain::ball(Point::zero(n), 1.0);
}

Domain MapSpec::image_domain() const {
    switch (kind) {
    case MapKind::BallAutomorphism: return Domain::ball(Point::zero(n), 1.0);
    case MapKind::CayleyBallToHalfspace: return Domain::half_space(n);
    case MapKind::CayleyHalfspaceToBall: return Domain::ball(Point::zero(n), 1.0);
    case MapKind::RadialStretch: return Domain::punctured_ball(Point::zero(n), 1.0);
    case MapKind::PlanarAnalyticSquare: return Domain::ball(Point(1, 0), 1.3); // superset of image
    }
    return Domain::ball(Point::zero(n), 1.0);
}

std::string MapSpec::descriptor() const {
    switch (kind) {
    case MapKind::BallAutomorphism: {
        std::string s = "mobius:a=";
        for (int i = 0; i < a.dim(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
        if (!rotation.empty()) s += ";rot";
        return s;
    }
    case MapKind::CayleyBallToHalfspace: return "cayley";
    case MapKind::CayleyHalfspaceToBall: return "cayleyinv";
    case MapKind::RadialStretch: return "radial:K=" + std::to_string(K);
    case MapKind::PlanarAnalyticSquare: return "square";
    }
    return "?";
}

Point apply_map(const MapSpec& f, const Point& x) {
    if (x.dim() != f.n) throw std::invalid_argument("apply_map: dimension mismatch");
    switch (f.kind) {
    case MapKind::BallAutomorphism: {
        if (x.norm() >= 1) throw std::invalid_argument("apply_map: x outside B^n");
        return rotate(f.rotation, sigma(f.a, x), false);
    }
    case MapKind::CayleyBallToHalfspace:
        if (x.norm() >= 1) throw std::invalid_argument("apply_map: x outside B^n");
        return cayley(x);
    case MapKind::CayleyHalfspaceToBall:
        if (x.last() <= 0) throw std::invalid_argument("apply_map: x outside H^n");
        return cayley(x);
    case MapKind::RadialStretch: {
        double r = x.norm();
        if (r == 0) throw std::invalid_argument("apply_map: radial stretch undefined at origin");
        if (r >= 1) throw std::invalid_argument("apply_map: x outside B^n");
        return std::pow(r, 1.0 / f.K - 1.0) * x;
    }
    case MapKind::PlanarAnalyticSquare: {
        if (dist(x, Point(1, 0)) >= 0.5)
            throw std::invalid_argument("apply_map: x outside the square map's disk");
        return Point(x[0] * x[0] - x[1] * x[1], 2 * x[0] * x[1]);
    }
    }
    return x;
}

Point apply_inverse(const MapSpec& f, const Point& y) {
    if (y.dim() != f.n) throw std::invalid_argument("apply_inverse: dimension mismatch");
    switch (f.kind) {
    case MapKind::BallAutomorphism: {
        Point w = rotate(f.rotation, y, true);
        if (w.norm() >= 1) throw std::invalid_argument("apply_inverse: y outside B^n");
        return sigma(-f.a, w);
    }
    case MapKind::CayleyBallToHalfspace:
        if (y.last() <= 0) throw std::invalid_argument("apply_inverse: y outside H^n");
        return cayley(y);
    case MapKind::CayleyHalfspaceToBall:
        if (y.norm() >= 1) throw std::invalid_argument("apply_inverse: y outside B^n");
        return cayley(y);
    case MapKind::RadialStretch: {
        double r = y.norm();
        if (r == 0) throw std::invalid_argument("apply_inverse: origin not in image");
        if (r >= 1) throw std::invalid_argument("apply_inverse: y outside B^n");
        return std::pow(r, f.K - 1.0) * y;
    }
    case MapKind::PlanarAnalyticSquare: {
        double r = std::hypot(y[0], y[1]);
        double phi = std::atan2(y[1], y[0]);
        Point x(std::sqrt(r) * std::cos(phi / 2), std::sqrt(r) * std::sin(phi / 2));
        return x;
    }
    }
    return y;
}

} // namespace hypmet
