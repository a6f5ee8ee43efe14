#include "hypmet/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hypmet/numeric.hpp"

namespace hypmet {

namespace {

// Desk-scale sampling window per variant: center and half-extent of the box
// points are drawn from (rejection into G).
void sampling_box(const Domain& G, Point& center, double& half) {
    switch (G.kind()) {
    case DomainKind::HalfSpace: {
        center = Point::zero(G.dim());
        center[G.dim() - 1] = 1.5;
        half = 1.5;
        return;
    }
    case DomainKind::Ball:
    case DomainKind::PuncturedBall:
    case DomainKind::DiskWithSlit:
        center = G.center();
        half = G.radius();
        return;
    case DomainKind::PuncturedSpace:
        center = G.center();
        half = 2.0;
        return;
    case DomainKind::Strip:
        center = Point(0, 0);
        half = 1.0; // y is the binding direction; x spread handled below
        return;
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: {
        double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
        for (const Point& v : G.vertices()) {
            x0 = std::min(x0, v[0]);
            y0 = std::min(y0, v[1]);
            x1 = std::max(x1, v[0]);
            y1 = std::max(y1, v[1]);
        }
        center = Point(0.5 * (x0 + x1), 0.5 * (y0 + y1));
        half = 0.5 * std::max(x1 - x0, y1 - y0);
        return;
    }
    case DomainKind::BallComplement:
        center = G.center();
        half = 3.0 * G.radius();
        return;
    }
    center = Point::zero(G.dim());
    half = 1.0;
}

} // namespace

Point sample_point_in(const Domain& G, SplitMix64& rng, double min_bd) {
    Point center;
    double half = 1;
    sampling_box(G, center, half);
    double floor_bd = std::max(min_bd, 1e-7 * G.scale());
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Point p = Point::zero(G.dim());
        for (int i = 0; i < G.dim(); ++i) p[i] = center[i] + rng.uniform(-half, half);
        if (G.kind() == DomainKind::Strip) p[0] = rng.uniform(-4.0, 4.0);
        if (!G.contains(p)) continue;
        if (G.boundary_distance(p) < floor_bd) continue;
        return p;
    }
    throw std::runtime_error("sample_point_in: rejection sampling failed");
}

namespace {

Point near_boundary_point(const Domain& G, SplitMix64& rng, double min_bd) {
    double scale = G.scale();
    double lo = std::max(min_bd, 1e-5 * scale);
    double hi = std::max(0.009 * scale, 1.5 * lo);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Point seed = sample_point_in(G, rng, min_bd);
        Point z = G.nearest_boundary_point(seed);
        Point dir = seed - z;
        double nd = dir.norm();
        if (nd <= 0) continue;
        double u = lo * std::pow(hi / lo, rng.next_double()); // log-uniform
        Point p = z + (u / nd) * dir;
        if (!G.contains(p)) continue;
        double d = G.boundary_distance(p);
        if (d < std::max(min_bd, 1e-9 * scale)) continue;
        return p;
    }
    return sample_point_in(G, rng, min_bd);
}

} // namespace

PairSampleXY sample_pair(const Domain& G, SplitMix64& rng, PairStratum stratum,
                         double min_bd) {
    PairSampleXY out;
    switch (stratum) {
    case PairStratum::Uniform:
        out.x = sample_point_in(G, rng, min_bd);
        out.y = sample_point_in(G, rng, min_bd);
        return out;
    case PairStratum::NearBoundary:
        out.x = near_boundary_point(G, rng, min_bd);
        out.y = sample_point_in(G, rng, min_bd);
        if (rng.next_double() < 0.5) std::swap(out.x, out.y);
        return out;
    case PairStratum::NearCoincident: {
        out.x = sample_point_in(G, rng, min_bd);
        double scale = G.scale();
        double lo = 1e-6 * scale, hi = 0.009 * scale;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            double u = lo * std::pow(hi / lo, rng.next_double());
            double phi = rng.uniform(0, 2 * kPi);
            Point y = out.x;
            y[0] += u * std::cos(phi);
            y[1] += u * std::sin(phi);
            if (G.dim() > 2) continue; // planar strata only
            if (!G.contains(y)) continue;
            if (G.boundary_distance(y) < std::max(min_bd, 1e-9 * scale)) continue;
            out.y = y;
            return out;
        }
        out.y = out.x;
        return out;
    }
    }
    return out;
}

PairSampleXY sample_pair_lambda_ball(const Domain& G, SplitMix64& rng, double lambda,
                                     double min_bd) {
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("lambda must be in (0,1)");
    PairSampleXY out;
    out.x = sample_point_in(G, rng, min_bd);
    double r = lambda * G.boundary_distance(out.x);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Point y = out.x;
        for (int i = 0; i < G.dim(); ++i) y[i] += rng.uniform(-r, r);
        if (dist(y, out.x) >= r) continue;
        if (!G.contains(y)) continue;
        if (min_bd > 0 && G.boundary_distance(y) < min_bd) continue;
        out.y = y;
        return out;
    }
    out.y = out.x;
    return out;
}

} // namespace hypmet
