#include "hypmet/boundary_sup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hypmet/closed_forms.hpp"
#include "hypmet/numeric.hpp"

namespace hypmet {

namespace {

struct SupOutcome {
    double value = 0;
    double error = 0;
};

struct Bracket {
    std::size_t piece;
    double t_lo, t_hi;
    double peak;
};

// Coarse scan per piece, keep the best local-max brackets, refine each by
// golden section on the 1-D parameter. Objectives here are piecewise smooth
// with few local maxima; kinks at polygon vertices are covered because
// vertices are always scan points (piece endpoints).
template <typename Objective>
SupOutcome maximize_over_boundary(const BoundaryParam& bp, const SupSolverConfig& cfg,
                                  Objective&& obj) {
    if (bp.pieces.empty()) throw std::invalid_argument("empty boundary parametrization");

    std::size_t n_pieces = bp.pieces.size();
    long per_piece = cfg.coarse_samples_per_segment;
    if (n_pieces > 8) {
        long budget = static_cast<long>(cfg.coarse_samples_per_segment) * 8;
        per_piece = std::max<long>(3, budget / static_cast<long>(n_pieces));
    }

    double best = -1e300;
    double slope_max = 0;
    std::vector<Bracket> brackets;
    std::vector<double> fv;

    for (std::size_t pi = 0; pi < n_pieces; ++pi) {
        const BoundaryPiece& piece = bp.pieces[pi];
        if (piece.kind == BoundaryPiece::Kind::SinglePoint) {
            best = std::max(best, obj(piece.eval(0)));
            continue;
        }
        long N = per_piece;
        fv.assign(N, 0);
        double dt = 1.0 / static_cast<double>(N - 1);
        for (long i = 0; i < N; ++i) {
            fv[i] = obj(piece.eval(i * dt));
            if (i > 0) slope_max = std::max(slope_max, std::abs(fv[i] - fv[i - 1]) / dt);
        }
        for (long i = 0; i < N; ++i) {
            best = std::max(best, fv[i]);
            bool left_ok = (i == 0) || fv[i] >= fv[i - 1];
            bool right_ok = (i == N - 1) || fv[i] >= fv[i + 1];
            if (left_ok && right_ok) {
                double lo = (i == 0) ? 0.0 : (i - 1) * dt;
                double hi = (i == N - 1) ? 1.0 : (i + 1) * dt;
                brackets.push_back({pi, lo, hi, fv[i]});
            }
        }
    }

    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& a, const Bracket& b) { return a.peak > b.peak; });

    // Refine the top multistart brackets, then any remaining bracket whose
    // coarse peak still beats the best refined value (near-ties).
    double refined_width = 0;
    std::size_t refined = 0;
    for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
        const Bracket& br = brackets[bi];
        bool must = bi < static_cast<std::size_t>(cfg.multistart_count);
        if (!must && br.peak <= best && refined >= static_cast<std::size_t>(cfg.multistart_count))
            break;
        const BoundaryPiece& piece = bp.pieces[br.piece];
        auto g = golden_max([&](double t) { return obj(piece.eval(t)); }, br.t_lo, br.t_hi,
                            cfg.refinement);
        best = std::max(best, g.value);
        refined_width = std::max(refined_width, g.bracket_width);
        ++refined;
        if (refined > 64) break;
    }

    SupOutcome out;
    out.value = best;
    out.error = slope_max * refined_width + 1e-12;
    return out;
}

template <typename Objective>
MetricValue solve_sup(const Domain& G, const Point& x, const Point& y,
                      const SupSolverConfig& cfg, MetricKind kind, Objective&& obj) {
    BoundaryParam bp = boundary_param(G, x, y, cfg.trunc_factor);
    SupOutcome r = maximize_over_boundary(bp, cfg, obj);
    if (cfg.truncation_doubling_check && !G.bounded()) {
        BoundaryParam bp2 = boundary_param(G, x, y, 2.0 * cfg.trunc_factor);
        SupOutcome r2 = maximize_over_boundary(bp2, cfg, obj);
        double delta = std::abs(r2.value - r.value);
        r.value = std::max(r.value, r2.value);
        r.error = std::max(r.error, r2.error) + delta;
    }
    return MetricValue(r.value, r.error, kind);
}

void require_interior(const Domain& G, const Point& x, const Point& y) {
    if (!G.contains(x) || !G.contains(y) || G.boundary_distance(x) <= 0 ||
        G.boundary_distance(y) <= 0)
        throw std::invalid_argument("points must lie strictly inside G");
}

} // namespace

MetricValue s_metric(const Domain& G, const Point& x, const Point& y,
                     const SupSolverConfig& cfg) {
    require_interior(G, x, y);
    if (x == y) return MetricValue::exact(0.0, MetricKind::S);
    if (G.kind() == DomainKind::HalfSpace && cfg.allow_closed_form) return s_halfspace(x, y);
    double b = dist(x, y);
    auto obj = [&](const Point& z) { return b / (dist(x, z) + dist(z, y)); };
    MetricValue m = solve_sup(G, x, y, cfg, MetricKind::S, obj);
    if (m.value > 1.0) m.value = 1.0;
    return m;
}

MetricValue v_metric(const Domain& G, const Point& x, const Point& y,
                     const SupSolverConfig& cfg) {
    require_interior(G, x, y);
    if (x == y) return MetricValue::exact(0.0, MetricKind::V);
    // the angle objective is discontinuous across the segment; detect the
    // sup = pi configuration exactly before optimizing
    if (G.segment_hits_boundary(x, y)) return MetricValue::exact(kPi, MetricKind::V);
    auto obj = [&](const Point& z) {
        if (z == x || z == y) return kPi; // boundary point hits an endpoint
        return angle_at(x, z, y);
    };
    MetricValue m = solve_sup(G, x, y, cfg, MetricKind::V, obj);
    if (m.value > kPi) m.value = kPi;
    return m;
}

namespace {

template <typename Objective>
double oracle_scan(const Domain& G, const Point& x, const Point& y, long grid, Objective&& obj) {
    BoundaryParam bp = boundary_param(G, x, y);
    double total = bp.total_length();
    double best = -1e300;
    for (const BoundaryPiece& piece : bp.pieces) {
        long N;
        if (piece.kind == BoundaryPiece::Kind::SinglePoint || total <= 0) {
            N = 1;
        } else {
            N = std::max<long>(2, static_cast<long>(grid * (piece.length() / total)));
        }
        if (N == 1) {
            best = std::max(best, obj(piece.eval(0)));
            continue;
        }
        double dt = 1.0 / static_cast<double>(N - 1);
        for (long i = 0; i < N; ++i) best = std::max(best, obj(piece.eval(i * dt)));
    }
    return best;
}

} // namespace

double s_oracle(const Domain& G, const Point& x, const Point& y, long grid) {
    require_interior(G, x, y);
    if (x == y) return 0.0;
    double b = dist(x, y);
    return oracle_scan(G, x, y, grid,
                       [&](const Point& z) { return b / (dist(x, z) + dist(z, y)); });
}

double v_oracle(const Domain& G, const Point& x, const Point& y, long grid) {
    require_interior(G, x, y);
    if (x == y) return 0.0;
    if (G.segment_hits_boundary(x, y)) return kPi;
    return oracle_scan(G, x, y, grid, [&](const Point& z) {
        if (z == x || z == y) return kPi;
        return angle_at(x, z, y);
    });
}

} // namespace hypmet
