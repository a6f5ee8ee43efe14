#include "hypmet/special_domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypmet/numeric.hpp"
#include "hypmet/rng.hpp"

namespace hypmet {

namespace {

// Feasibility margin of a candidate witness: how much slack the inclusion
// B(w, delta r) subset B(z,r) \ G has (negative = infeasible).
double witness_margin(const Domain& G, const Point& z, double r, double delta,
                      const Point& w) {
    double containment = (r - dist(w, z)) - delta * r;
    double clearance = G.exterior_clearance(w) - delta * r;
    return std::min(containment, clearance);
}

} // namespace

std::vector<ConditionWitness> h_delta_check(const Domain& G, double delta, long trials,
                                            std::uint64_t seed, double r_cap) {
    // the condition is defined for delta in (0, 1/2); larger values are
    // accepted so the expected geometric failure can be observed
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("h_delta_check: delta must be in (0, 1)");
    if (G.dim() != 2) throw std::invalid_argument("h_delta_check: planar domains only");

    double r_max = G.bounded() ? G.diameter() / 2.0 : r_cap;
    std::vector<ConditionWitness> out;
    out.reserve(trials);

    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = stream_for(seed, "hdelta:" + G.descriptor(), static_cast<std::uint64_t>(i));
        ConditionWitness cw;
        cw.z = sample_boundary_point(G, rng, r_cap);
        cw.r = rng.uniform(1e-3 * r_max, r_max);

        // spiral grid of candidates, then local expansion of the best one
        double best = -1e300;
        Point best_w = cw.z;
        for (int ring = 1; ring <= 9; ++ring) {
            double rad = 0.1 * ring * cw.r;
            for (int k = 0; k < 64; ++k) {
                double th = 2 * kPi * (k + 0.5 * (ring % 2)) / 64.0;
                Point w(cw.z[0] + rad * std::cos(th), cw.z[1] + rad * std::sin(th));
                double m = witness_margin(G, cw.z, cw.r, delta, w);
                if (m > best) {
                    best = m;
                    best_w = w;
                }
            }
        }
        double step = 0.05 * cw.r;
        for (int it = 0; it < 60; ++it) {
            bool improved = false;
            for (int k = 0; k < 8; ++k) {
                double th = kPi * k / 4.0;
                Point w(best_w[0] + step * std::cos(th), best_w[1] + step * std::sin(th));
                double m = witness_margin(G, cw.z, cw.r, delta, w);
                if (m > best) {
                    best = m;
                    best_w = w;
                    improved = true;
                }
            }
            if (!improved) step *= 0.5;
            if (step < 1e-12 * cw.r) break;
        }

        cw.pass = best >= 0;
        if (cw.pass) {
            cw.has_witness = true;
            cw.w = best_w;
        }
        cw.margin = best;
        out.push_back(cw);
    }
    return out;
}

double nonlinearity_delta_estimate(const Domain& G, long trials, std::uint64_t seed) {
    if (G.dim() != 2) throw std::invalid_argument("nonlinearity_delta_estimate: planar only");
    if (!G.bounded())
        throw std::invalid_argument("nonlinearity_delta_estimate: bounded boundary required");
    if (G.kind() != DomainKind::ConvexPolygon && G.kind() != DomainKind::KochPolygon)
        throw std::invalid_argument("nonlinearity_delta_estimate: polygonal boundary required");

    const auto& verts = G.vertices();
    std::size_t nv = verts.size();
    double dG = G.diameter();
    double r_lo = 0.05 * dG;
    double r_hi = dG;

    double delta_hat = 1.0;
    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = stream_for(seed, "nonlin:" + G.descriptor(), static_cast<std::uint64_t>(i));
        Point z = sample_boundary_point(G, rng);
        double r = r_lo * std::pow(r_hi / r_lo, rng.next_double());
        // random line L meeting B(z,r): unit normal + offset
        double phi = rng.uniform(0, 2 * kPi);
        Point nhat(std::cos(phi), std::sin(phi));
        double offset = rng.uniform(-r, r);

        double dmax = 0;
        long in_ball = 0;
        for (std::size_t e = 0; e < nv; ++e) {
            const Point& a = verts[e];
            const Point& b = verts[(e + 1) % nv];
            double len = dist(a, b);
            if (point_segment_distance(z, a, b) > r + len) continue;
            long steps = std::max<long>(2, static_cast<long>(std::ceil(len / (r / 64.0))));
            for (long s = 0; s <= steps; ++s) {
                double t = static_cast<double>(s) / steps;
                Point q = a + t * (b - a);
                if (dist(q, z) >= r) continue;
                ++in_ball;
                double dline = std::abs(dot(q - z, nhat) - offset);
                dmax = std::max(dmax, dline);
            }
        }
        if (in_ball < 8)
            throw std::runtime_error(
                "nonlinearity_delta_estimate: fewer than 8 boundary samples in B(z,r); "
                "boundary resolution too low for this radius");
        delta_hat = std::min(delta_hat, dmax / r);
    }
    return delta_hat;
}

double strip_ratio_objective(double t) {
    return std::asin(t) * std::sqrt(t * t + (1 - t) * (1 - t)) / t;
}

double strip_constant() {
    // coarse scan to bracket the interior minimum, then golden section
    const int N = 4096;
    double best_t = 0.5, best_v = 1e300;
    for (int i = 1; i < N; ++i) {
        double t = static_cast<double>(i) / N;
        double v = strip_ratio_objective(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double lo = std::max(1e-12, best_t - 1.0 / N);
    double hi = std::min(1.0 - 1e-12, best_t + 1.0 / N);
    auto g = golden_min([](double t) { return strip_ratio_objective(t); }, lo, hi, 64);
    return g.value;
}

} // namespace hypmet
