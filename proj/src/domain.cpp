#include "hypmet/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hypmet/numeric.hpp"

namespace hypmet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double signed_area(const std::vector<Point>& v) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

bool polygon_is_convex_ccw(const std::vector<Point>& v) {
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        double c = cross2(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (c < -1e-12) return false;
    }
    return signed_area(v) > 0;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    std::vector<Point> h;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = h.size();
        for (const Point& p : pts) {
            while (h.size() >= start + 2 && cross2(h[h.size() - 2], h[h.size() - 1], p) <= 0)
                h.pop_back();
            h.push_back(p);
        }
        h.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return h;
}

double hull_diameter(const std::vector<Point>& vertices) {
    std::vector<Point> h = convex_hull(vertices);
    double best = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
            best = std::max(best, dist(h[i], h[j]));
    return best;
}

Point rotate_m60(const Point& v) {
    const double c = 0.5, s = std::sqrt(3.0) / 2.0;
    return Point(c * v[0] + s * v[1], -s * v[0] + c * v[1]);
}

std::vector<Point> koch_vertices(int depth) {
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<Point> v = {Point(0, 1), Point(-h, -0.5), Point(h, -0.5)}; // CCW
    for (int d = 0; d < depth; ++d) {
        std::vector<Point> next;
        next.reserve(v.size() * 4);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % v.size()];
            Point e3 = (1.0 / 3.0) * (b - a);
            Point p1 = a + e3;
            Point p2 = p1 + e3;
            Point peak = p1 + rotate_m60(e3); // spike to the right of travel = outward
            next.push_back(a);
            next.push_back(p1);
            next.push_back(peak);
            next.push_back(p2);
        }
        v = std::move(next);
    }
    return v;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt(const Point& p) {
    std::string s;
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ',';
        s += fmt(p[i]);
    }
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// Factories

Domain Domain::half_space(int n) {
    if (n < 2 || n > Point::kMaxDim) throw std::invalid_argument("half_space: bad dimension");
    Domain g;
    g.kind_ = DomainKind::HalfSpace;
    g.n_ = n;
    g.convex_ = true;
    g.diameter_ = kInf;
    g.scale_ = 1;
    return g;
}

Domain Domain::ball(const Point& center, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("ball: radius must be positive");
    if (!center.finite()) throw std::invalid_argument("ball: center not finite");
    Domain g;
    g.kind_ = DomainKind::Ball;
    g.n_ = center.dim();
    g.convex_ = true;
    g.center_ = center;
    g.radius_ = radius;
    g.diameter_ = 2 * radius;
    g.scale_ = radius;
    return g;
}

Domain Domain::punctured_space(const Point& puncture) {
    if (!puncture.finite()) throw std::invalid_argument("punctured_space: puncture not finite");
    Domain g;
    g.kind_ = DomainKind::PuncturedSpace;
    g.n_ = puncture.dim();
    g.convex_ = false;
    g.center_ = puncture;
    g.diameter_ = kInf;
    g.scale_ = 1;
    return g;
}

Domain Domain::strip() {
    Domain g;
    g.kind_ = DomainKind::Strip;
    g.n_ = 2;
    g.convex_ = true;
    g.diameter_ = kInf;
    g.scale_ = 1;
    return g;
}

Domain Domain::convex_polygon(std::vector<Point> vertices_ccw) {
    if (vertices_ccw.size() < 3) throw std::invalid_argument("convex_polygon: need >= 3 vertices");
    for (const Point& p : vertices_ccw) {
        if (p.dim() != 2) throw std::invalid_argument("convex_polygon: planar only");
        if (!p.finite()) throw std::invalid_argument("convex_polygon: vertex not finite");
    }
    for (std::size_t i = 0; i < vertices_ccw.size(); ++i)
        if (dist(vertices_ccw[i], vertices_ccw[(i + 1) % vertices_ccw.size()]) < 1e-14)
            throw std::invalid_argument("convex_polygon: degenerate edge");
    if (!polygon_is_convex_ccw(vertices_ccw))
        throw std::invalid_argument("convex_polygon: vertices must be convex and CCW");
    Domain g;
    g.kind_ = DomainKind::ConvexPolygon;
    g.n_ = 2;
    g.convex_ = true;
    g.vertices_ = std::move(vertices_ccw);
    g.diameter_ = hull_diameter(g.vertices_);
    g.scale_ = g.diameter_ / 2;
    return g;
}

Domain Domain::koch(int depth) {
    if (depth < 0 || depth > 8) throw std::invalid_argument("koch: depth must be in [0,8]");
    Domain g;
    g.kind_ = DomainKind::KochPolygon;
    g.n_ = 2;
    g.convex_ = false;
    g.vertices_ = koch_vertices(depth);
    g.koch_depth_ = depth;
    g.diameter_ = hull_diameter(g.vertices_);
    g.scale_ = g.diameter_ / 2;
    return g;
}

Domain Domain::ball_complement(const Point& center, double radius) {
    Domain g = ball(center, radius);
    g.kind_ = DomainKind::BallComplement;
    g.convex_ = false;
    g.diameter_ = kInf;
    return g;
}

Domain Domain::punctured_ball(const Point& center, double radius) {
    Domain g = ball(center, radius);
    g.kind_ = DomainKind::PuncturedBall;
    g.convex_ = false;
    return g;
}

Domain Domain::disk_with_slit() {
    Domain g = ball(Point(0, 0), 1.0);
    g.kind_ = DomainKind::DiskWithSlit;
    g.convex_ = false;
    return g;
}

// ---------------------------------------------------------------------------
// Membership and distances

bool Domain::polygon_contains(const Point& x) const {
    // even-odd ray crossing
    bool inside = false;
    std::size_t n = vertices_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[j];
        if ((a[1] > x[1]) != (b[1] > x[1])) {
            double t = (x[1] - a[1]) / (b[1] - a[1]);
            if (x[0] < a[0] + t * (b[0] - a[0])) inside = !inside;
        }
    }
    return inside;
}

double Domain::polygon_boundary_distance(const Point& x) const {
    double best = kInf;
    std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(x, vertices_[i], vertices_[(i + 1) % n]));
    return best;
}

bool Domain::contains(const Point& x) const {
    if (x.dim() != n_) throw std::invalid_argument("dimension mismatch");
    switch (kind_) {
    case DomainKind::HalfSpace: return x.last() > 0;
    case DomainKind::Ball: return dist(x, center_) < radius_;
    case DomainKind::PuncturedSpace: return !(x == center_);
    case DomainKind::Strip: return std::abs(x[1]) < 1;
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: return polygon_contains(x);
    case DomainKind::BallComplement: return dist(x, center_) > radius_;
    case DomainKind::PuncturedBall: {
        double d = dist(x, center_);
        return d > 0 && d < radius_;
    }
    case DomainKind::DiskWithSlit:
        if (x.norm() >= 1) return false;
        return !(x[1] == 0 && x[0] >= 0 && x[0] <= 1);
    }
    return false;
}

bool Domain::in_closure(const Point& x, double tol) const {
    if (x.dim() != n_) throw std::invalid_argument("dimension mismatch");
    double t = tol * std::max(scale_, 1.0);
    switch (kind_) {
    case DomainKind::HalfSpace: return x.last() >= -t;
    case DomainKind::Ball:
    case DomainKind::PuncturedBall: return dist(x, center_) <= radius_ + t;
    case DomainKind::PuncturedSpace: return true;
    case DomainKind::Strip: return std::abs(x[1]) <= 1 + t;
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon:
        return polygon_contains(x) || polygon_boundary_distance(x) <= t;
    case DomainKind::BallComplement: return dist(x, center_) >= radius_ - t;
    case DomainKind::DiskWithSlit: return x.norm() <= 1 + t;
    }
    return false;
}

double Domain::boundary_distance(const Point& x) const {
    if (x.dim() != n_) throw std::invalid_argument("dimension mismatch");
    if (!in_closure(x)) throw std::invalid_argument("boundary_distance: point outside closure of G");
    double d = 0;
    switch (kind_) {
    case DomainKind::HalfSpace: d = x.last(); break;
    case DomainKind::Ball: d = radius_ - dist(x, center_); break;
    case DomainKind::PuncturedSpace: d = dist(x, center_); break;
    case DomainKind::Strip: d = 1 - std::abs(x[1]); break;
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: d = polygon_boundary_distance(x); break;
    case DomainKind::BallComplement: d = dist(x, center_) - radius_; break;
    case DomainKind::PuncturedBall:
        d = std::min(radius_ - dist(x, center_), dist(x, center_));
        break;
    case DomainKind::DiskWithSlit: {
        double slit = point_segment_distance(x, Point(0, 0), Point(1, 0));
        d = std::min(1 - x.norm(), slit);
        break;
    }
    }
    return std::max(d, 0.0);
}

double Domain::exterior_clearance(const Point& x) const {
    if (x.dim() != n_) throw std::invalid_argument("dimension mismatch");
    switch (kind_) {
    case DomainKind::HalfSpace: return std::max(0.0, -x.last());
    case DomainKind::Ball:
    case DomainKind::PuncturedBall: return std::max(0.0, dist(x, center_) - radius_);
    case DomainKind::PuncturedSpace: return 0.0;
    case DomainKind::Strip: return std::max(0.0, std::abs(x[1]) - 1);
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon:
        return polygon_contains(x) ? 0.0 : polygon_boundary_distance(x);
    case DomainKind::BallComplement: return std::max(0.0, radius_ - dist(x, center_));
    case DomainKind::DiskWithSlit: return std::max(0.0, x.norm() - 1);
    }
    return 0.0;
}

Point Domain::nearest_boundary_point(const Point& x) const {
    if (x.dim() != n_) throw std::invalid_argument("dimension mismatch");
    auto on_sphere = [&](const Point& c, double r) {
        Point d = x - c;
        double nd = d.norm();
        if (nd < 1e-300) {
            Point e = Point::zero(n_);
            e[0] = 1;
            return c + r * e;
        }
        return c + (r / nd) * d;
    };
    switch (kind_) {
    case DomainKind::HalfSpace: {
        Point p = x;
        p[n_ - 1] = 0;
        return p;
    }
    case DomainKind::Ball: return on_sphere(center_, radius_);
    case DomainKind::PuncturedSpace: return center_;
    case DomainKind::Strip: return Point(x[0], x[1] >= 0 ? 1.0 : -1.0);
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: {
        double best = kInf;
        Point bp = vertices_[0];
        std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vertices_[i];
            const Point& b = vertices_[(i + 1) % n];
            Point e = b - a;
            double len2 = e.norm_sq();
            double t = len2 > 0 ? clamp01(dot(x - a, e) / len2) : 0.0;
            Point cand = a + t * e;
            double d = dist(x, cand);
            if (d < best) {
                best = d;
                bp = cand;
            }
        }
        return bp;
    }
    case DomainKind::BallComplement: return on_sphere(center_, radius_);
    case DomainKind::PuncturedBall: {
        double dc = dist(x, center_);
        return dc < radius_ - dc ? center_ : on_sphere(center_, radius_);
    }
    case DomainKind::DiskWithSlit: {
        Point e(1, 0);
        double t = clamp01(x[0]);
        Point slit_pt(t, 0.0);
        double ds = dist(x, slit_pt);
        double dc = 1 - x.norm();
        return ds < dc ? slit_pt : on_sphere(Point(0, 0), 1.0);
    }
    }
    return x;
}

bool Domain::segment_hits_boundary(const Point& x, const Point& y) const {
    if (x.dim() != n_ || y.dim() != n_) throw std::invalid_argument("dimension mismatch");
    if (convex_) return false; // chord of a convex domain stays inside
    switch (kind_) {
    case DomainKind::PuncturedSpace:
        return point_segment_distance(center_, x, y) <= 1e-12 * std::max(1.0, dist(x, y));
    case DomainKind::KochPolygon: {
        std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (segments_intersect(vertices_[i], vertices_[(i + 1) % n], x, y)) return true;
        return false;
    }
    case DomainKind::BallComplement: {
        // both endpoints outside the closed ball; the chord crosses the
        // sphere iff it comes closer than r to the center
        Point e = y - x;
        double len2 = e.norm_sq();
        double t = len2 > 0 ? clamp01(dot(center_ - x, e) / len2) : 0.0;
        return dist(center_, x + t * e) <= radius_;
    }
    case DomainKind::PuncturedBall:
        return point_segment_distance(center_, x, y) <= 1e-12 * std::max(1.0, dist(x, y));
    case DomainKind::DiskWithSlit:
        return segments_intersect(Point(0, 0), Point(1, 0), x, y);
    default: return false;
    }
}

std::string Domain::descriptor() const {
    switch (kind_) {
    case DomainKind::HalfSpace: return "halfspace:n=" + std::to_string(n_);
    case DomainKind::Ball: return "ball:c=" + fmt(center_) + ";r=" + fmt(radius_);
    case DomainKind::PuncturedSpace: return "punctured:p=" + fmt(center_);
    case DomainKind::Strip: return "strip";
    case DomainKind::ConvexPolygon: return "polygon:k=" + std::to_string(vertices_.size());
    case DomainKind::KochPolygon: return "koch:depth=" + std::to_string(koch_depth_);
    case DomainKind::BallComplement: return "ballcomp:c=" + fmt(center_) + ";r=" + fmt(radius_);
    case DomainKind::PuncturedBall: return "pball:c=" + fmt(center_) + ";r=" + fmt(radius_);
    case DomainKind::DiskWithSlit: return "diskslit";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Segment helpers

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    Point e = b - a;
    double len2 = e.norm_sq();
    if (len2 == 0) return dist(p, a);
    double t = clamp01(dot(p - a, e) / len2);
    return dist(p, a + t * e);
}

namespace {
int sgn(double v) { return (v > 0) - (v < 0); }

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}
} // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = sgn(cross2(c, d, a));
    int d2 = sgn(cross2(c, d, b));
    int d3 = sgn(cross2(a, b, c));
    int d4 = sgn(cross2(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_segment_collinear(c, d, a)) return true;
    if (d2 == 0 && on_segment_collinear(c, d, b)) return true;
    if (d3 == 0 && on_segment_collinear(a, b, c)) return true;
    if (d4 == 0 && on_segment_collinear(a, b, d)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Boundary parametrization

BoundaryPiece BoundaryPiece::segment(const Point& a, const Point& b) {
    BoundaryPiece p;
    p.kind = Kind::Segment;
    p.a = a;
    p.b = b;
    return p;
}

BoundaryPiece BoundaryPiece::arc(const Point& center, double radius, const Point& u,
                                 const Point& v, double theta0, double theta1) {
    BoundaryPiece p;
    p.kind = Kind::Arc;
    p.center = center;
    p.radius = radius;
    p.u_axis = u;
    p.v_axis = v;
    p.theta0 = theta0;
    p.theta1 = theta1;
    return p;
}

BoundaryPiece BoundaryPiece::single_point(const Point& pt) {
    BoundaryPiece p;
    p.kind = Kind::SinglePoint;
    p.a = pt;
    return p;
}

Point BoundaryPiece::eval(double t) const {
    switch (kind) {
    case Kind::Segment: return a + t * (b - a);
    case Kind::Arc: {
        double th = theta0 + t * (theta1 - theta0);
        return center + (radius * std::cos(th)) * u_axis + (radius * std::sin(th)) * v_axis;
    }
    case Kind::SinglePoint: return a;
    }
    return a;
}

double BoundaryPiece::length() const {
    switch (kind) {
    case Kind::Segment: return dist(a, b);
    case Kind::Arc: return radius * std::abs(theta1 - theta0);
    case Kind::SinglePoint: return 0.0;
    }
    return 0.0;
}

double BoundaryParam::total_length() const {
    double s = 0;
    for (const auto& p : pieces) s += p.length();
    return s;
}

double truncation_radius(const Domain& G, const Point& x, const Point& y) {
    return 64.0 * (dist(x, y) + G.boundary_distance(x) + G.boundary_distance(y));
}

namespace {

// Orthonormal basis (u,v) of the 2-plane through `c` containing directions
// dx, dy; falls back to coordinate axes when degenerate.
void plane_basis(int n, const Point& dx, const Point& dy, Point& u, Point& v) {
    Point a = dx;
    if (a.norm() < 1e-14) a = dy;
    if (a.norm() < 1e-14) {
        a = Point::zero(n);
        a[0] = 1;
    }
    u = normalized(a);
    Point w = dy - dot(dy, u) * u;
    if (w.norm() < 1e-12 * std::max(1.0, dy.norm())) {
        // collinear configuration: any orthogonal completion works
        int k = 0;
        double best = std::abs(u[0]);
        for (int i = 1; i < n; ++i)
            if (std::abs(u[i]) < best) {
                best = std::abs(u[i]);
                k = i;
            }
        Point e = Point::zero(n);
        e[k] = 1;
        w = e - dot(e, u) * u;
    }
    v = normalized(w);
}

BoundaryParam circle_section(const Domain& G, const Point& x, const Point& y) {
    BoundaryParam bp;
    const Point& c = G.center();
    Point u, v;
    plane_basis(G.dim(), x - c, y - c, u, v);
    bp.pieces.push_back(BoundaryPiece::arc(c, G.radius(), u, v, 0, 2 * kPi));
    return bp;
}

} // namespace

BoundaryParam boundary_param(const Domain& G, const Point& x, const Point& y,
                             double trunc_factor) {
    if (!G.contains(x) || !G.contains(y))
        throw std::invalid_argument("boundary_param: points must lie in G");
    BoundaryParam bp;
    double R = trunc_factor * truncation_radius(G, x, y);
    Point mid = 0.5 * (x + y);
    switch (G.kind()) {
    case DomainKind::HalfSpace: {
        int n = G.dim();
        Point foot = mid;
        foot[n - 1] = 0;
        Point h = y - x;
        h[n - 1] = 0;
        Point w;
        if (h.norm() > 1e-13 * std::max(1.0, dist(x, y))) {
            w = normalized(h);
        } else {
            w = Point::zero(n);
            w[0] = 1;
        }
        bp.pieces.push_back(BoundaryPiece::segment(foot - R * w, foot + R * w));
        break;
    }
    case DomainKind::Ball:
    case DomainKind::BallComplement:
        return circle_section(G, x, y);
    case DomainKind::PuncturedSpace:
        bp.pieces.push_back(BoundaryPiece::single_point(G.center()));
        break;
    case DomainKind::Strip: {
        double mx = mid[0];
        bp.pieces.push_back(BoundaryPiece::segment(Point(mx - R, 1), Point(mx + R, 1)));
        bp.pieces.push_back(BoundaryPiece::segment(Point(mx - R, -1), Point(mx + R, -1)));
        break;
    }
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: {
        const auto& v = G.vertices();
        std::size_t n = v.size();
        bp.pieces.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            bp.pieces.push_back(BoundaryPiece::segment(v[i], v[(i + 1) % n]));
        break;
    }
    case DomainKind::PuncturedBall: {
        bp = circle_section(G, x, y);
        bp.pieces.push_back(BoundaryPiece::single_point(G.center()));
        break;
    }
    case DomainKind::DiskWithSlit: {
        bp = circle_section(G, x, y);
        bp.pieces.push_back(BoundaryPiece::segment(Point(0, 0), Point(1, 0)));
        break;
    }
    }
    return bp;
}

BoundaryParam boundary_param_static(const Domain& G, double r_cap) {
    BoundaryParam bp;
    switch (G.kind()) {
    case DomainKind::HalfSpace: {
        int n = G.dim();
        Point a = Point::zero(n);
        Point b = Point::zero(n);
        a[0] = -r_cap;
        b[0] = r_cap;
        bp.pieces.push_back(BoundaryPiece::segment(a, b));
        break;
    }
    case DomainKind::Strip:
        bp.pieces.push_back(BoundaryPiece::segment(Point(-r_cap, 1), Point(r_cap, 1)));
        bp.pieces.push_back(BoundaryPiece::segment(Point(-r_cap, -1), Point(r_cap, -1)));
        break;
    case DomainKind::Ball:
    case DomainKind::BallComplement:
    case DomainKind::PuncturedBall:
    case DomainKind::DiskWithSlit: {
        Point u = Point::zero(G.dim());
        Point v = Point::zero(G.dim());
        u[0] = 1;
        v[1] = 1;
        bp.pieces.push_back(BoundaryPiece::arc(G.center(), G.radius(), u, v, 0, 2 * kPi));
        if (G.kind() == DomainKind::PuncturedBall)
            bp.pieces.push_back(BoundaryPiece::single_point(G.center()));
        if (G.kind() == DomainKind::DiskWithSlit)
            bp.pieces.push_back(BoundaryPiece::segment(Point(0, 0), Point(1, 0)));
        break;
    }
    case DomainKind::PuncturedSpace:
        bp.pieces.push_back(BoundaryPiece::single_point(G.center()));
        break;
    case DomainKind::ConvexPolygon:
    case DomainKind::KochPolygon: {
        const auto& v = G.vertices();
        std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i)
            bp.pieces.push_back(BoundaryPiece::segment(v[i], v[(i + 1) % n]));
        break;
    }
    }
    return bp;
}

Point sample_boundary_point(const Domain& G, SplitMix64& rng, double r_cap) {
    BoundaryParam bp = boundary_param_static(G, r_cap);
    double total = bp.total_length();
    if (total <= 0) return bp.pieces.front().eval(0);
    // zero-length pieces (punctures) get a small pseudo-weight
    double pseudo = total / 16.0;
    double grand = 0;
    for (const auto& p : bp.pieces) grand += std::max(p.length(), p.kind == BoundaryPiece::Kind::SinglePoint ? pseudo : 0.0);
    double pick = rng.uniform(0, grand);
    for (const auto& p : bp.pieces) {
        double w = std::max(p.length(), p.kind == BoundaryPiece::Kind::SinglePoint ? pseudo : 0.0);
        if (pick <= w) return p.eval(rng.next_double());
        pick -= w;
    }
    return bp.pieces.back().eval(1.0);
}

} // namespace hypmet
