#pragma once

#include "hypmet/boundary_sup.hpp"
#include "hypmet/closed_forms.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/quasihyperbolic.hpp"

namespace hypmet {

/// Single dispatcher over all implemented metrics (CLI `dist` and the
/// bilipschitz sweep go through here).
inline MetricValue eval_metric(const Domain& G, MetricKind kind, const Point& x, const Point& y,
                               const SupSolverConfig& sup = {},
                               const GeodesicGraphConfig& grid = {}) {
    switch (kind) {
    case MetricKind::Rho: return rho_of(G, x, y);
    case MetricKind::J: return j_metric(G, x, y);
    case MetricKind::JStar: return j_star(G, x, y);
    case MetricKind::P: return p_function(G, x, y);
    case MetricKind::S: return s_metric(G, x, y, sup);
    case MetricKind::V: return v_metric(G, x, y, sup);
    case MetricKind::K: return k_of(G, x, y, grid);
    }
    throw std::invalid_argument("unknown metric kind");
}

} // namespace hypmet
