#pragma once

#include <string>

namespace hypmet {

enum class MetricKind { Rho, J, JStar, P, S, V, K };

inline const char* metric_name(MetricKind k) {
    switch (k) {
    case MetricKind::Rho: return "rho";
    case MetricKind::J: return "j";
    case MetricKind::JStar: return "jstar";
    case MetricKind::P: return "p";
    case MetricKind::S: return "s";
    case MetricKind::V: return "v";
    case MetricKind::K: return "k";
    }
    return "?";
}

/// A computed metric value together with a solver error estimate.
/// error_bound is 0 exactly when the value came from a closed form.
/// Sup solvers (s,v) under-estimate; the grid solver for k over-estimates.
struct MetricValue {
    double value = 0;
    double error_bound = 0;
    MetricKind kind = MetricKind::S;

    MetricValue() = default;
    MetricValue(double v, double err, MetricKind k) : value(v), error_bound(err), kind(k) {}

    static MetricValue exact(double v, MetricKind k) { return MetricValue(v, 0.0, k); }
};

} // namespace hypmet
