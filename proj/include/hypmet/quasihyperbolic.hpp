#pragma once

#include <cstdint>

#include "hypmet/domain.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/point.hpp"
#include "hypmet/verification.hpp"

namespace hypmet {

/// Grid-graph shortest-path approximation of the quasihyperbolic metric.
/// Planar domains only; cells must satisfy d(center) > cell diagonal.
struct GeodesicGraphConfig {
    int base_resolution = 128; // cells across the working box
    int neighbor_stencil = 16; // 8 or 16 neighbors
    int refinement_levels = 2; // each halves the cell size near the best path
    double box_inflation = 4.0; // unbounded domains: pair bbox inflated by this

    void validate() const;
};

/// k on H^n is the hyperbolic metric; exact, error_bound 0.
MetricValue k_exact_halfspace(const Point& x, const Point& y);

/// Edge-weighted shortest path with trapezoidal 1/d weights, plus local
/// grid refinement near the current best path. The reported value is an
/// upper bound of k_G; error_bound combines the last two refinement levels
/// with a stencil metrication allowance (the graph value can exceed the
/// true infimum by up to ~2.8% for the 16-neighbor stencil on directions
/// between stencil rays, independent of cell size).
MetricValue k_numeric(const Domain& G, const Point& x, const Point& y,
                      const GeodesicGraphConfig& cfg = {});

/// Exact on HalfSpace, numeric elsewhere.
MetricValue k_of(const Domain& G, const Point& x, const Point& y,
                 const GeodesicGraphConfig& cfg = {});

/// Lemma check: k_{B(z,d(z))}(x,y) <= (1+lambda)/(1-lambda) k_G(x,y) for
/// x,y in B(z, lambda d(z)), over `pair_count` random pairs.
VerificationOutcome check_kz_lemma(const Domain& G, const Point& z, double lambda,
                                   long pair_count, std::uint64_t seed,
                                   const GeodesicGraphConfig& cfg = {});

} // namespace hypmet
