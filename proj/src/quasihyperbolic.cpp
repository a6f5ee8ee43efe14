#include "hypmet/quasihyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hypmet/closed_forms.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/rng.hpp"

namespace hypmet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Box {
    double x0, y0, x1, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

const int kOffsets16[16][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1},
                               {-1, 1}, {-1, -1}, {1, 2},  {1, -2}, {-1, 2}, {-1, -2},
                               {2, 1},  {2, -1}, {-2, 1}, {-2, -1}};

Box working_box(const Domain& G, const Point& x, const Point& y, double inflation) {
    if (G.bounded()) {
        switch (G.kind()) {
        case DomainKind::Ball:
        case DomainKind::PuncturedBall:
        case DomainKind::DiskWithSlit: {
            const Point& c = G.center();
            double r = G.radius();
            return {c[0] - r, c[1] - r, c[0] + r, c[1] + r};
        }
        case DomainKind::ConvexPolygon:
        case DomainKind::KochPolygon: {
            double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
            for (const Point& v : G.vertices()) {
                x0 = std::min(x0, v[0]);
                y0 = std::min(y0, v[1]);
                x1 = std::max(x1, v[0]);
                y1 = std::max(y1, v[1]);
            }
            return {x0, y0, x1, y1};
        }
        default: break;
        }
    }
    // unbounded: bounding box of {x,y} inflated, clamped to the domain slab
    double cx = 0.5 * (x[0] + y[0]);
    double cy = 0.5 * (x[1] + y[1]);
    double hx = 0.5 * std::abs(x[0] - y[0]);
    double hy = 0.5 * std::abs(x[1] - y[1]);
    double h = inflation * std::max({hx, hy, 1e-9});
    Box b{cx - h, cy - h, cx + h, cy + h};
    if (G.kind() == DomainKind::HalfSpace) {
        b.y0 = std::max(b.y0, 0.0);
    } else if (G.kind() == DomainKind::Strip) {
        b.y0 = -1.0;
        b.y1 = 1.0;
    }
    return b;
}

// Sparse level grid: nodes are cell centers that clear the margin rule.
struct LevelGraph {
    double cell = 0;
    double ox = 0, oy = 0; // origin of cell (0,0)
    int nx = 0, ny = 0;
    std::unordered_map<std::int64_t, int> id_of; // cell key -> node index
    std::vector<Point> pos;
    std::vector<double> inv_d; // 1 / d(center)

    std::int64_t key(int ix, int iy) const {
        return static_cast<std::int64_t>(iy) * (nx + 4) + ix;
    }
    int node(int ix, int iy) const {
        auto it = id_of.find(key(ix, iy));
        return it == id_of.end() ? -1 : it->second;
    }
    Point center(int ix, int iy) const {
        return Point(ox + (ix + 0.5) * cell, oy + (iy + 0.5) * cell);
    }

    int add_cell(const Domain& G, int ix, int iy) {
        if (ix < 0 || iy < 0 || ix >= nx || iy >= ny) return -1;
        std::int64_t k = key(ix, iy);
        auto it = id_of.find(k);
        if (it != id_of.end()) return it->second;
        Point c = center(ix, iy);
        if (!G.contains(c)) return -1;
        double d = G.boundary_distance(c);
        if (d <= cell * std::sqrt(2.0)) return -1; // margin rule
        int id = static_cast<int>(pos.size());
        id_of.emplace(k, id);
        pos.push_back(c);
        inv_d.push_back(1.0 / d);
        return id;
    }
};

struct PathResult {
    double length = kInf;
    std::vector<Point> nodes; // x ... y
};

// Dijkstra between two off-grid endpoints attached to nearby cells.
PathResult shortest_path(const Domain& G, LevelGraph& g, const Point& x, const Point& y,
                         int stencil) {
    const auto* offs = kOffsets16;
    int n_offs = stencil >= 16 ? 16 : 8;

    double inv_dx = 1.0 / G.boundary_distance(x);
    double inv_dy = 1.0 / G.boundary_distance(y);

    auto attach = [&](const Point& p) {
        std::vector<int> ids;
        int ix = static_cast<int>(std::floor((p[0] - g.ox) / g.cell));
        int iy = static_cast<int>(std::floor((p[1] - g.oy) / g.cell));
        for (int dy = -3; dy <= 3; ++dy)
            for (int dx = -3; dx <= 3; ++dx) {
                int id = g.node(ix + dx, iy + dy);
                if (id >= 0 && dist(g.pos[id], p) <= 2.5 * g.cell) ids.push_back(id);
            }
        return ids;
    };

    std::vector<int> from_x = attach(x);
    std::vector<int> from_y = attach(y);
    PathResult res;
    // endpoints close together: the direct segment inside G may beat any
    // grid route; it is also the fallback when no cells are reachable
    double direct = dist(x, y) * 0.5 * (inv_dx + inv_dy);
    bool direct_ok = dist(x, y) <= 0.75 * std::min(G.boundary_distance(x), G.boundary_distance(y));
    if (from_x.empty() || from_y.empty()) {
        if (direct_ok) {
            res.length = direct;
            res.nodes = {x, y};
            return res;
        }
        throw std::runtime_error(
            "k_numeric: endpoint too close to the boundary for this grid; increase resolution");
    }

    std::size_t N = g.pos.size();
    std::vector<double> dist_to(N, kInf);
    std::vector<int> prev(N, -1);
    using QE = std::pair<double, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    for (int id : from_x) {
        double w = dist(x, g.pos[id]) * 0.5 * (inv_dx + g.inv_d[id]);
        if (w < dist_to[id]) {
            dist_to[id] = w;
            pq.push({w, id});
        }
    }
    std::vector<char> is_target(N, 0);
    double best_total = direct_ok ? direct : kInf;
    int best_exit = -1;
    for (int id : from_y) is_target[id] = 1;

    std::vector<char> done(N, 0);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        if (du >= best_total) break;
        if (is_target[u]) {
            double total = du + dist(y, g.pos[u]) * 0.5 * (inv_dy + g.inv_d[u]);
            if (total < best_total) {
                best_total = total;
                best_exit = u;
            }
        }
        int ux = static_cast<int>(std::floor((g.pos[u][0] - g.ox) / g.cell));
        int uy = static_cast<int>(std::floor((g.pos[u][1] - g.oy) / g.cell));
        for (int o = 0; o < n_offs; ++o) {
            int v = g.node(ux + offs[o][0], uy + offs[o][1]);
            if (v < 0 || done[v]) continue;
            double len = g.cell * std::hypot(static_cast<double>(offs[o][0]),
                                             static_cast<double>(offs[o][1]));
            double w = du + len * 0.5 * (g.inv_d[u] + g.inv_d[v]);
            if (w < dist_to[v]) {
                dist_to[v] = w;
                prev[v] = u;
                pq.push({w, v});
            }
        }
    }

    if (best_total == kInf)
        throw std::runtime_error("k_numeric: endpoints not connected on this grid; increase resolution");
    res.length = best_total;
    res.nodes.push_back(y);
    for (int u = best_exit; u >= 0; u = prev[u]) res.nodes.push_back(g.pos[u]);
    res.nodes.push_back(x);
    std::reverse(res.nodes.begin(), res.nodes.end());
    return res;
}

LevelGraph build_base(const Domain& G, const Box& box, int resolution) {
    LevelGraph g;
    // `resolution` cells across the shorter box side; elongated boxes get
    // more columns, capped so the node count stays bounded
    double extent = std::min(box.width(), box.height());
    g.cell = extent / resolution;
    double nodes = (box.width() / g.cell) * (box.height() / g.cell);
    const double node_cap = 2.5e6;
    if (nodes > node_cap) g.cell *= std::sqrt(nodes / node_cap);
    g.ox = box.x0;
    g.oy = box.y0;
    g.nx = static_cast<int>(std::ceil(box.width() / g.cell));
    g.ny = static_cast<int>(std::ceil(box.height() / g.cell));
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) g.add_cell(G, ix, iy);
    return g;
}

LevelGraph build_tube(const Domain& G, const Box& box, double fine_cell,
                      const std::vector<Point>& path, double tube_radius) {
    LevelGraph g;
    g.cell = fine_cell;
    g.ox = box.x0;
    g.oy = box.y0;
    g.nx = static_cast<int>(std::ceil(box.width() / fine_cell));
    g.ny = static_cast<int>(std::ceil(box.height() / fine_cell));
    int w = static_cast<int>(std::ceil(tube_radius / fine_cell));
    for (const Point& p : path) {
        int ix = static_cast<int>(std::floor((p[0] - g.ox) / fine_cell));
        int iy = static_cast<int>(std::floor((p[1] - g.oy) / fine_cell));
        for (int dy = -w; dy <= w; ++dy)
            for (int dx = -w; dx <= w; ++dx) g.add_cell(G, ix + dx, iy + dy);
    }
    return g;
}

} // namespace

void GeodesicGraphConfig::validate() const {
    if (base_resolution < 32) throw std::invalid_argument("base_resolution must be >= 32");
    if (refinement_levels < 0) throw std::invalid_argument("refinement_levels must be >= 0");
    if (neighbor_stencil != 8 && neighbor_stencil != 16)
        throw std::invalid_argument("neighbor_stencil must be 8 or 16");
}

MetricValue k_exact_halfspace(const Point& x, const Point& y) {
    MetricValue m = rho_halfspace(x, y);
    m.kind = MetricKind::K;
    return m;
}

MetricValue k_numeric(const Domain& G, const Point& x, const Point& y,
                      const GeodesicGraphConfig& cfg) {
    cfg.validate();
    if (G.dim() != 2) throw std::invalid_argument("k_numeric: planar domains only");
    if (!G.contains(x) || !G.contains(y))
        throw std::invalid_argument("k_numeric: points must lie in G");
    if (x == y) return MetricValue(0.0, 0.0, MetricKind::K);

    Box box = working_box(G, x, y, cfg.box_inflation);
    LevelGraph base = build_base(G, box, cfg.base_resolution);

    double diag = base.cell * std::sqrt(2.0);
    if (G.boundary_distance(x) < 2 * diag || G.boundary_distance(y) < 2 * diag)
        throw std::runtime_error(
            "k_numeric: endpoint within 2 cell diagonals of the boundary; increase resolution");

    PathResult cur = shortest_path(G, base, x, y, cfg.neighbor_stencil);
    double prev_value = cur.length;
    double last_delta = 0;
    double coarse_cell = base.cell;
    for (int level = 1; level <= cfg.refinement_levels; ++level) {
        double fine_cell = base.cell / std::pow(2.0, level);
        LevelGraph tube = build_tube(G, box, fine_cell, cur.nodes, 3.0 * coarse_cell);
        PathResult next = shortest_path(G, tube, x, y, cfg.neighbor_stencil);
        last_delta = std::abs(prev_value - next.length);
        if (next.length < cur.length) cur = std::move(next);
        prev_value = cur.length;
        coarse_cell = fine_cell;
    }

    // one-sided bias: graph paths over-estimate k. Metrication allowance is
    // the worst-case direction-quantization factor of the stencil.
    double metrication = (cfg.neighbor_stencil >= 16 ? 0.0280 : 0.0830) * cur.length;
    double err = last_delta + metrication + 1e-9;
    return MetricValue(cur.length, err, MetricKind::K);
}

MetricValue k_of(const Domain& G, const Point& x, const Point& y,
                 const GeodesicGraphConfig& cfg) {
    if (G.kind() == DomainKind::HalfSpace) return k_exact_halfspace(x, y);
    return k_numeric(G, x, y, cfg);
}

VerificationOutcome check_kz_lemma(const Domain& G, const Point& z, double lambda,
                                   long pair_count, std::uint64_t seed,
                                   const GeodesicGraphConfig& cfg) {
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("lambda must be in (0,1)");
    if (!G.contains(z)) throw std::invalid_argument("z must lie in G");
    double dz = G.boundary_distance(z);
    Domain inner_ball = Domain::ball(z, dz);
    double factor = (1 + lambda) / (1 - lambda);

    VerificationOutcome out;
    auto draw = [&](SplitMix64& rng) {
        for (;;) {
            Point p(z[0] + rng.uniform(-lambda * dz, lambda * dz),
                    z[1] + rng.uniform(-lambda * dz, lambda * dz));
            if (dist(p, z) < lambda * dz && G.contains(p)) return p;
        }
    };
    for (long i = 0; i < pair_count; ++i) {
        SplitMix64 rng = stream_for(seed, "kz:" + G.descriptor(), static_cast<std::uint64_t>(i));
        Point x = draw(rng);
        Point y = draw(rng);
        if (x == y) {
            out.record(x, y, 0.0, 0.0, 1e-9);
            continue;
        }
        MetricValue lhs = k_numeric(inner_ball, x, y, cfg);
        MetricValue rhs = k_of(G, x, y, cfg);
        double slack = lhs.error_bound + factor * rhs.error_bound + 1e-9;
        out.record(x, y, lhs.value, factor * rhs.value, slack);
    }
    return out;
}

} // namespace hypmet
