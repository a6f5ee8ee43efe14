#include "hypmet/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypmet/closed_forms.hpp"
#include "hypmet/metrics.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/parallel.hpp"
#include "hypmet/sampling.hpp"

namespace hypmet {

namespace {

std::vector<Point> direction_samples(int n, int count) {
    std::vector<Point> dirs;
    dirs.reserve(count);
    if (n == 2) {
        for (int i = 0; i < count; ++i) {
            double th = 2 * kPi * i / count;
            dirs.emplace_back(std::cos(th), std::sin(th));
        }
    } else if (n == 3) {
        // Fibonacci sphere
        const double ga = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < count; ++i) {
            double z = 1.0 - 2.0 * (i + 0.5) / count;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double th = ga * i;
            dirs.emplace_back(r * std::cos(th), r * std::sin(th), z);
        }
    } else {
        throw std::invalid_argument("linear_dilatation: dimensions 2 and 3 only");
    }
    return dirs;
}

double hyp_distance(double a, double b) { return std::hypot(a, b); }

// 2s/(1+s^2) = th(2 artanh s), increasing on [0,1]
double two_s_over(double s) {
    s = std::clamp(s, 0.0, 1.0);
    return 2 * s / (1 + s * s);
}

MetricValue s_of(const Domain& G, const Point& x, const Point& y, const SupSolverConfig& sup) {
    if (G.kind() == DomainKind::HalfSpace) return s_halfspace(x, y);
    return s_metric(G, x, y, sup);
}

} // namespace

DilatationEstimate linear_dilatation(const MapSpec& f, const Point& z,
                                     std::vector<double> radii, int directions) {
    if (radii.empty()) throw std::invalid_argument("linear_dilatation: need radii");
    std::sort(radii.begin(), radii.end(), std::greater<double>());
    Domain src = f.source_domain();
    if (!src.contains(z)) throw std::invalid_argument("linear_dilatation: z not interior to source");
    if (src.boundary_distance(z) <= radii.front())
        throw std::invalid_argument("linear_dilatation: sphere S(z,r) exits the source domain");

    DilatationEstimate est;
    est.z = z;
    est.radii = radii;
    Point fz = apply_map(f, z);
    std::vector<Point> dirs = direction_samples(f.n, directions);
    for (double r : radii) {
        double mx = 0, mn = 1e300;
        for (const Point& e : dirs) {
            Point q = z + r * e;
            double d = dist(apply_map(f, q), fz);
            mx = std::max(mx, d);
            mn = std::min(mn, d);
        }
        est.ratios.push_back(mx / mn);
    }
    est.H = est.ratios.back();
    if (est.ratios.size() >= 3) {
        double d1 = std::abs(est.ratios[est.ratios.size() - 1] - est.ratios[est.ratios.size() - 2]);
        double d2 = std::abs(est.ratios[est.ratios.size() - 2] - est.ratios[est.ratios.size() - 3]);
        est.trend_ok = d1 <= d2 + 0.01;
    }
    return est;
}

VerificationOutcome check_mobius_j_k_distortion(const MapSpec& f, const Domain& G,
                                                const DistortionOptions& opt) {
    if (!f.is_mobius()) throw std::invalid_argument("check_mobius_j_k_distortion: Moebius maps only");
    Domain img = f.image_domain();
    VerificationOutcome out;

    // j chain, exact on both sides
    for (long i = 0; i < opt.samples; ++i) {
        SplitMix64 rng = stream_for(opt.seed, "jkdist:j:" + f.descriptor(), i);
        auto pr = sample_pair(G, rng, stratum_for_index(i));
        Point fx = apply_map(f, pr.x);
        Point fy = apply_map(f, pr.y);
        double j_src = j_metric(G, pr.x, pr.y).value;
        double j_img = j_metric(img, fx, fy).value;
        out.record(pr.x, pr.y, 0.5 * j_src, j_img, 1e-9);
        out.record(pr.x, pr.y, j_img, 2.0 * j_src, 1e-9);
    }

    // k chain; exact on H^n, numeric on B^n with clearance for the grid
    long k_samples = opt.k_samples < 0 ? opt.samples : opt.k_samples;
    bool src_numeric = G.kind() != DomainKind::HalfSpace;
    bool img_numeric = img.kind() != DomainKind::HalfSpace;
    double src_margin = src_numeric ? 0.08 * G.scale() : 0.0;
    double img_margin = img_numeric ? 0.08 * img.scale() : 0.0;

    std::vector<Witness> kin(k_samples);
    std::vector<std::array<double, 4>> kv(k_samples); // k_src, ek_src, k_img, ek_img
    parallel_for(static_cast<std::size_t>(k_samples), [&](std::size_t i) {
        SplitMix64 rng = stream_for(opt.seed, "jkdist:k:" + f.descriptor(), i);
        Point x, y, fx, fy;
        for (;;) {
            auto pr = sample_pair(G, rng, PairStratum::Uniform, src_margin);
            fx = apply_map(f, pr.x);
            fy = apply_map(f, pr.y);
            if (img_margin > 0 && (img.boundary_distance(fx) < img_margin ||
                                   img.boundary_distance(fy) < img_margin))
                continue;
            x = pr.x;
            y = pr.y;
            break;
        }
        MetricValue ks = k_of(G, x, y, opt.grid);
        MetricValue ki = k_of(img, fx, fy, opt.grid);
        kin[i] = {x, y, 0, 0};
        kv[i] = {ks.value, ks.error_bound, ki.value, ki.error_bound};
    });
    for (long i = 0; i < k_samples; ++i) {
        double ks = kv[i][0], eks = kv[i][1], ki = kv[i][2], eki = kv[i][3];
        out.record(kin[i].x, kin[i].y, 0.5 * ks, ki, 0.5 * eks + eki + 1e-9);
        out.record(kin[i].x, kin[i].y, ki, 2.0 * ks, eki + 2.0 * eks + 1e-9);
    }
    return out;
}

VerificationOutcome check_s_mobius_bound(const MapSpec& f, const DistortionOptions& opt) {
    if (!f.is_mobius()) throw std::invalid_argument("check_s_mobius_bound: Moebius maps only");
    Domain src = f.source_domain();
    if (src.kind() != DomainKind::Ball)
        throw std::invalid_argument("check_s_mobius_bound: source must be B^n");
    Domain img = f.image_domain();

    long n = opt.samples;
    std::vector<Witness> rows(n);
    std::vector<double> slacks(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        SplitMix64 rng = stream_for(opt.seed, "smob:" + f.descriptor(), i);
        auto pr = sample_pair(src, rng, stratum_for_index(i));
        Point fx = apply_map(f, pr.x);
        Point fy = apply_map(f, pr.y);
        MetricValue s_src = s_of(src, pr.x, pr.y, opt.sup);
        MetricValue s_img = s_of(img, fx, fy, opt.sup);
        double rhs = two_s_over(s_src.value);
        double rhs_hi = two_s_over(std::min(1.0, s_src.value + s_src.error_bound));
        rows[i] = {pr.x, pr.y, s_img.value, rhs};
        slacks[i] = s_img.error_bound + (rhs_hi - rhs) + 1e-9;
    });
    VerificationOutcome out;
    for (long i = 0; i < n; ++i) out.record(rows[i].x, rows[i].y, rows[i].lhs, rows[i].rhs, slacks[i]);
    return out;
}

VerificationOutcome check_p_mobius_bounds(const MapSpec& f, int part,
                                          const DistortionOptions& opt) {
    if (!f.is_mobius()) throw std::invalid_argument("check_p_mobius_bounds: Moebius maps only");
    Domain src = f.source_domain();
    Domain img = f.image_domain();
    bool src_ball = src.kind() == DomainKind::Ball;
    bool img_ball = img.kind() == DomainKind::Ball;
    if (part == 1 && !(src_ball && !img_ball))
        throw std::invalid_argument("part 1 needs f: B^n -> H^n");
    if (part == 2 && !(src_ball && img_ball))
        throw std::invalid_argument("part 2 needs f: B^n -> B^n");
    if (part == 3 && !(!src_ball && img_ball))
        throw std::invalid_argument("part 3 needs f: H^n -> B^n");
    if (part < 1 || part > 3) throw std::invalid_argument("part must be 1, 2 or 3");

    VerificationOutcome out;
    for (long i = 0; i < opt.samples; ++i) {
        SplitMix64 rng = stream_for(opt.seed, "pmob:" + std::to_string(part) + f.descriptor(), i);
        auto pr = sample_pair(src, rng, stratum_for_index(i));
        Point fx = apply_map(f, pr.x);
        Point fy = apply_map(f, pr.y);
        double p_src = p_function(src, pr.x, pr.y).value;
        double p_img = p_function(img, fx, fy).value;
        double upper = two_s_over(p_src);
        double lower;
        if (part == 1) {
            lower = p_src;
        } else {
            double rad = std::max(0.0, 1.0 - p_src * p_src);
            lower = p_src / (1.0 + std::sqrt(rad));
        }
        out.record(pr.x, pr.y, lower, p_img, 1e-9);
        out.record(pr.x, pr.y, p_img, upper, 1e-9);
    }
    return out;
}

VerificationOutcome check_qr_holder_bound(double K, const DistortionOptions& opt) {
    MapSpec f = MapSpec::radial_stretch(K, 2);
    Domain ball = Domain::ball(Point(0, 0), 1.0);
    double alpha = 1.0 / K;
    const double lambda2 = 4.0;
    double factor = std::pow(lambda2, 1.0 - alpha);

    long n = opt.samples;
    std::vector<Witness> rows(n);
    std::vector<double> slacks(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        SplitMix64 rng = stream_for(opt.seed, "qrh:K=" + std::to_string(K), i);
        Point x, y;
        for (;;) {
            auto pr = sample_pair(ball, rng, stratum_for_index(i));
            if (pr.x.norm() < 1e-3 || pr.y.norm() < 1e-3) continue; // stretch singular at 0
            x = pr.x;
            y = pr.y;
            break;
        }
        Point fx = apply_map(f, x);
        Point fy = apply_map(f, y);
        MetricValue s_src = s_metric(ball, x, y, opt.sup);
        MetricValue s_img = s_metric(ball, fx, fy, opt.sup);
        auto rhs_of = [&](double s) { return factor * std::pow(two_s_over(s), alpha); };
        double rhs = rhs_of(s_src.value);
        double rhs_hi = rhs_of(std::min(1.0, s_src.value + s_src.error_bound));
        rows[i] = {x, y, s_img.value, rhs};
        slacks[i] = s_img.error_bound + (rhs_hi - rhs) + 1e-9;
    });
    VerificationOutcome out;
    for (long i = 0; i < n; ++i) out.record(rows[i].x, rows[i].y, rows[i].lhs, rows[i].rhs, slacks[i]);
    return out;
}

double empirical_bilipschitz_constant(const MapSpec& f, MetricKind metric, const Domain& G,
                                      long samples, std::uint64_t seed,
                                      const SupSolverConfig& sup,
                                      const GeodesicGraphConfig& grid) {
    Domain img = f.image_domain();
    double min_bd = metric == MetricKind::K ? 0.08 * G.scale() : 0.0;
    std::vector<double> ratios(samples, 1.0);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        SplitMix64 rng = stream_for(seed, "bilip:" + f.descriptor() + metric_name(metric), i);
        for (int attempt = 0; attempt < 100; ++attempt) {
            auto pr = sample_pair(G, rng, stratum_for_index(i), min_bd);
            if (dist(pr.x, pr.y) < 1e-12 * G.scale()) continue;
            Point fx, fy;
            try {
                fx = apply_map(f, pr.x);
                fy = apply_map(f, pr.y);
            } catch (const std::exception&) {
                continue;
            }
            if (metric == MetricKind::K &&
                (img.boundary_distance(fx) < 0.08 * img.scale() ||
                 img.boundary_distance(fy) < 0.08 * img.scale()))
                continue;
            double m = eval_metric(G, metric, pr.x, pr.y, sup, grid).value;
            double mp = eval_metric(img, metric, fx, fy, sup, grid).value;
            if (m < 1e-12 || mp < 1e-12) continue;
            ratios[i] = std::max(mp / m, m / mp);
            return;
        }
    });
    double L = 1.0;
    for (double r : ratios) L = std::max(L, r);
    return L;
}

} // namespace hypmet
