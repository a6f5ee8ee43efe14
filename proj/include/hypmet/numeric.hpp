#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace hypmet {

inline constexpr double kPi = 3.14159265358979323846;

/// arcosh(1+u) for u >= 0 without cancellation near u = 0.
inline double acosh1p(double u) {
    if (u < 0) u = 0;
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

/// tanh(arcosh(1+u)/2) = sqrt(u(u+2))/(u+2), exact at u = 0.
inline double tanh_half_acosh1p(double u) {
    if (u <= 0) return 0.0;
    return std::sqrt(u * (u + 2.0)) / (u + 2.0);
}

/// tanh(t/2) from th = tanh(t): th / (1 + sqrt(1 - th^2)).
inline double tanh_half_from_tanh(double th) {
    double r = 1.0 - th * th;
    if (r < 0) r = 0;
    return th / (1.0 + std::sqrt(r));
}

/// tanh(log(1+u)) = (u^2+2u)/(u^2+2u+2), overflow-free for large u.
inline double tanh_log1p(double u) {
    if (u <= 0) return 0.0;
    if (u > 1e154) return 1.0;
    double a = u * u + 2.0 * u;
    return a / (a + 2.0);
}

/// w/sqrt(w^2+1) without overflow for large w.
inline double over_hypot1(double w) {
    if (w <= 0) return 0.0;
    return w / std::hypot(w, 1.0);
}

struct GoldenResult {
    double arg = 0;
    double value = 0;
    double bracket_width = 0;
};

/// Golden-section maximization of f on [a,b]. Assumes a single local max in
/// the bracket; `iters` shrink steps (0.618 per step).
template <typename F>
GoldenResult golden_max(F&& f, double a, double b, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iters && b - a > 0; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    GoldenResult r;
    if (f1 >= f2) {
        r.arg = x1;
        r.value = f1;
    } else {
        r.arg = x2;
        r.value = f2;
    }
    r.bracket_width = b - a;
    return r;
}

template <typename F>
GoldenResult golden_min(F&& f, double a, double b, int iters) {
    auto g = golden_max([&](double t) { return -f(t); }, a, b, iters);
    g.value = -g.value;
    return g;
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace hypmet
