#include "hypmet/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "hypmet/numeric.hpp"

namespace hypmet {

namespace {

void require_halfspace(const Point& x) {
    if (x.last() <= 0) throw std::invalid_argument("point has nonpositive last coordinate");
}

void require_ball(const Point& x) {
    if (x.norm() >= 1) throw std::invalid_argument("point on or outside the unit sphere");
}

// 1 - |x|^2 as (1-|x|)(1+|x|); keeps a relative grip near the sphere.
double one_minus_norm_sq(const Point& x) {
    double n = x.norm();
    return (1.0 - n) * (1.0 + n);
}

double min_boundary_dist(const Domain& G, const Point& x, const Point& y) {
    double dx = G.boundary_distance(x);
    double dy = G.boundary_distance(y);
    double m = std::min(dx, dy);
    if (m <= 0) throw std::invalid_argument("point on the boundary (d = 0)");
    return m;
}

} // namespace

MetricValue rho_halfspace(const Point& x, const Point& y) {
    check_same_dim(x, y);
    require_halfspace(x);
    require_halfspace(y);
    double u = dist_sq(x, y) / (2.0 * x.last() * y.last());
    return MetricValue::exact(acosh1p(u), MetricKind::Rho);
}

double tanh_half_rho_halfspace(const Point& x, const Point& y) {
    check_same_dim(x, y);
    require_halfspace(x);
    require_halfspace(y);
    double u = dist_sq(x, y) / (2.0 * x.last() * y.last());
    return tanh_half_acosh1p(u);
}

MetricValue rho_ball(const Point& x, const Point& y) {
    check_same_dim(x, y);
    require_ball(x);
    require_ball(y);
    double q = dist(x, y) / std::sqrt(one_minus_norm_sq(x) * one_minus_norm_sq(y));
    return MetricValue::exact(2.0 * std::asinh(q), MetricKind::Rho);
}

double tanh_half_rho_ball(const Point& x, const Point& y) {
    check_same_dim(x, y);
    require_ball(x);
    require_ball(y);
    double d2 = dist_sq(x, y);
    if (d2 == 0) return 0.0;
    return std::sqrt(d2 / (d2 + one_minus_norm_sq(x) * one_minus_norm_sq(y)));
}

MetricValue rho_of(const Domain& G, const Point& x, const Point& y) {
    if (G.kind() == DomainKind::HalfSpace) return rho_halfspace(x, y);
    if (G.kind() == DomainKind::Ball && G.radius() == 1.0 && G.center().norm_sq() == 0.0)
        return rho_ball(x, y);
    if (G.kind() == DomainKind::Ball) {
        // similarity-invariant: reduce to the unit ball
        Point xu = (1.0 / G.radius()) * (x - G.center());
        Point yu = (1.0 / G.radius()) * (y - G.center());
        return rho_ball(xu, yu);
    }
    throw std::invalid_argument("rho_of: hyperbolic metric available on B^n and H^n only");
}

MetricValue j_metric(const Domain& G, const Point& x, const Point& y) {
    check_same_dim(x, y);
    double m = min_boundary_dist(G, x, y);
    return MetricValue::exact(std::log1p(dist(x, y) / m), MetricKind::J);
}

MetricValue j_star(const Domain& G, const Point& x, const Point& y) {
    check_same_dim(x, y);
    double m = min_boundary_dist(G, x, y);
    double b = dist(x, y);
    // quotient form, one rounding step, exact at the extremes
    return MetricValue::exact(b == 0 ? 0.0 : b / (b + 2.0 * m), MetricKind::JStar);
}

MetricValue p_function(const Domain& G, const Point& x, const Point& y) {
    check_same_dim(x, y);
    double dx = G.boundary_distance(x);
    double dy = G.boundary_distance(y);
    if (dx <= 0 || dy <= 0) throw std::invalid_argument("point on the boundary (d = 0)");
    double b2 = dist_sq(x, y);
    double v = b2 == 0 ? 0.0 : std::sqrt(b2 / (b2 + 4.0 * dx * dy));
    return MetricValue::exact(v, MetricKind::P);
}

MetricValue s_halfspace(const Point& x, const Point& y) {
    check_same_dim(x, y);
    require_halfspace(x);
    require_halfspace(y);
    double u = dist_sq(x, y) / (2.0 * x.last() * y.last());
    return MetricValue::exact(tanh_half_acosh1p(u), MetricKind::S);
}

MetricValue rho_mobius_ball(const MapSpec& h, const Point& x, const Point& y) {
    if (!h.is_mobius()) throw std::invalid_argument("rho_mobius_ball: map is not Moebius");
    Point px = apply_inverse(h, x);
    Point py = apply_inverse(h, y);
    return rho_ball(px, py);
}

} // namespace hypmet
