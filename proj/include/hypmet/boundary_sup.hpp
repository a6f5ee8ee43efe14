#pragma once

#include "hypmet/domain.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

/// Configuration of the coarse-scan + golden-section boundary supremum
/// solver. The coarse budget is per smooth segment for boundaries with few
/// segments; many-edge polygons share a total budget of
/// 8 * coarse_samples_per_segment with at least 3 samples per edge so that
/// vertices are always scan points.
struct SupSolverConfig {
    int coarse_samples_per_segment = 256;
    int refinement = 80;       // golden-section iterations per bracket
    int multistart_count = 8;  // brackets kept for refinement
    bool truncation_doubling_check = false;
    bool allow_closed_form = true; // let s_metric delegate on HalfSpace
    double trunc_factor = 1.0;     // scales R_trunc (insensitivity checks)
};

/// Triangular ratio metric s_G(x,y) = sup_{z in bd G} |x-y|/(|x-z|+|z-y|).
/// Reported value is the refined maximum (an inner approximation).
MetricValue s_metric(const Domain& G, const Point& x, const Point& y,
                     const SupSolverConfig& cfg = {});

/// Visual angle metric v_G(x,y) = sup_{z in bd G} angle(x,z,y); returns pi
/// exactly when the boundary meets the open segment (x,y).
MetricValue v_metric(const Domain& G, const Point& x, const Point& y,
                     const SupSolverConfig& cfg = {});

/// Brute-force lower bounds over `grid` boundary points, no refinement.
double s_oracle(const Domain& G, const Point& x, const Point& y, long grid);
double v_oracle(const Domain& G, const Point& x, const Point& y, long grid);

} // namespace hypmet
