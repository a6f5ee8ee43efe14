#pragma once

#include "hypmet/domain.hpp"
#include "hypmet/maps.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

/// Hyperbolic distance in H^n = {x_n > 0}:
/// ch rho = 1 + |x-y|^2 / (2 x_n y_n), evaluated cancellation-safe.
MetricValue rho_halfspace(const Point& x, const Point& y);

/// Hyperbolic distance in B^n:
/// sh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2)).
MetricValue rho_ball(const Point& x, const Point& y);

/// th(rho_{B^n}(x,y)/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)).
double tanh_half_rho_ball(const Point& x, const Point& y);
double tanh_half_rho_halfspace(const Point& x, const Point& y);

/// Hyperbolic metric of G for G in {B^n, H^n}; throws otherwise.
MetricValue rho_of(const Domain& G, const Point& x, const Point& y);

/// Distance ratio metric j_G = log(1 + |x-y| / min{d(x), d(y)}).
MetricValue j_metric(const Domain& G, const Point& x, const Point& y);

/// j*_G = |x-y| / (|x-y| + 2 min{d(x), d(y)}); equals th(j_G/2).
MetricValue j_star(const Domain& G, const Point& x, const Point& y);

/// Point pair function p_G = |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
MetricValue p_function(const Domain& G, const Point& x, const Point& y);

/// Half-space identity s = p = th(rho/2), exact.
MetricValue s_halfspace(const Point& x, const Point& y);

/// Hyperbolic metric of h(B^n) for a Moebius h, via rho_{B^n}(h^-1 x, h^-1 y).
MetricValue rho_mobius_ball(const MapSpec& h, const Point& x, const Point& y);

} // namespace hypmet
