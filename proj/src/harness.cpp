#include "hypmet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "hypmet/closed_forms.hpp"
#include "hypmet/conformal.hpp"
#include "hypmet/maps.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/parallel.hpp"
#include "hypmet/sampling.hpp"
#include "hypmet/special_domains.hpp"

namespace hypmet {

namespace {

const double kSqrt2 = std::sqrt(2.0);

bool scope_all(const Domain&) { return true; }
bool scope_convex(const Domain& G) { return G.convex(); }
bool scope_ball(const Domain& G) { return G.kind() == DomainKind::Ball; }
bool scope_ball2(const Domain& G) { return G.kind() == DomainKind::Ball && G.dim() == 2; }
bool scope_halfspace(const Domain& G) { return G.kind() == DomainKind::HalfSpace; }
bool scope_strip(const Domain& G) { return G.kind() == DomainKind::Strip; }
bool scope_koch(const Domain& G) { return G.kind() == DomainKind::KochPolygon; }
bool scope_bounded(const Domain& G) { return G.bounded(); }
bool scope_ball_or_halfspace(const Domain& G) {
    return G.kind() == DomainKind::Ball || G.kind() == DomainKind::HalfSpace;
}
bool scope_planar(const Domain& G) { return G.dim() == 2; }

MetricValue s_of(const Domain& G, const Point& x, const Point& y, const SupSolverConfig& sup) {
    if (G.kind() == DomainKind::HalfSpace) return s_halfspace(x, y);
    return s_metric(G, x, y, sup);
}

bool rho_available(const Domain& G) {
    return G.kind() == DomainKind::Ball || G.kind() == DomainKind::HalfSpace;
}

std::string pair_label(const Domain& G, CaseSampler sampler, double lambda, double min_bd_frac) {
    char buf[64];
    if (sampler == CaseSampler::Stratified)
        std::snprintf(buf, sizeof buf, ":strat:mb%.6g", min_bd_frac);
    else
        std::snprintf(buf, sizeof buf, ":lam%.6g:mb%.6g", lambda, min_bd_frac);
    return "pairs:" + G.descriptor() + buf;
}

std::vector<PairEval> build_bundle(const Domain& G, long count, std::uint64_t seed,
                                   CaseSampler sampler, double lambda, double min_bd_frac,
                                   const CaseNeeds& needs, const SupSolverConfig& sup,
                                   const GeodesicGraphConfig& grid) {
    std::string label = pair_label(G, sampler, lambda, min_bd_frac);
    double min_bd = min_bd_frac * G.scale();
    bool want_rho = needs.rho && rho_available(G);
    std::vector<PairEval> out(count);
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
        SplitMix64 rng = stream_for(seed, label, i);
        PairSampleXY pr = sampler == CaseSampler::Stratified
                              ? sample_pair(G, rng, stratum_for_index(i), min_bd)
                              : sample_pair_lambda_ball(G, rng, lambda, min_bd);
        PairEval& e = out[i];
        e.x = pr.x;
        e.y = pr.y;
        e.b = dist(pr.x, pr.y);
        e.dx = G.boundary_distance(pr.x);
        e.dy = G.boundary_distance(pr.y);
        double m = std::min(e.dx, e.dy);
        e.j = std::log1p(e.b / m);
        e.jstar = e.b > 0 ? e.b / (e.b + 2 * m) : 0.0;
        e.p = e.b > 0 ? e.b / std::sqrt(e.b * e.b + 4 * e.dx * e.dy) : 0.0;
        if (want_rho) {
            e.rho = rho_of(G, pr.x, pr.y).value;
            e.has_rho = true;
        }
        if (needs.s) {
            e.s = s_of(G, pr.x, pr.y, sup);
            e.has_s = true;
        }
        if (needs.v) {
            e.v = v_metric(G, pr.x, pr.y, sup);
            e.has_v = true;
        }
        if (needs.k) {
            e.k = k_of(G, pr.x, pr.y, grid);
            e.has_k = true;
        }
    }, 4);
    return out;
}

// (e^j - 1)/2 without exponentials: |x-y| / (2 min{d(x),d(y)}).
double w_of(const PairEval& e) { return e.b / (2 * std::min(e.dx, e.dy)); }

using EvalFn = std::function<bool(const CaseContext&, const PairEval&, double&, double&, double&)>;

InequalityCase mk(std::string id, std::string anchor, int section,
                  std::function<bool(const Domain&)> scope, CaseNeeds needs, EvalFn eval) {
    InequalityCase c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.section = section;
    c.in_scope = std::move(scope);
    c.needs = needs;
    c.eval = std::move(eval);
    return c;
}

std::vector<InequalityCase> make_registry() {
    std::vector<InequalityCase> R;
    CaseNeeds none{};
    CaseNeeds needs_s{true, false, false, false, false};
    CaseNeeds needs_v{false, true, false, false, false};
    CaseNeeds needs_sv{true, true, false, false, false};
    CaseNeeds needs_rho{false, false, false, true, false};
    CaseNeeds needs_s_rho{true, false, false, true, false};
    CaseNeeds needs_k{false, false, true, false, false};
    CaseNeeds needs_k_rho{false, false, true, true, false};
    CaseNeeds needs_sk{true, false, true, false, false};

    R.push_back(mk("jstar_le_s", "j* <= s", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.jstar;
                       r = e.s.value;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("s_le_w", "s <= (e^j - 1)/2", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = w_of(e);
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("s_le_2jstar", "s <= 2 j*", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = 2 * e.jstar;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("jstar_le_p", "j* <= p", 2, scope_all, none,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.jstar;
                       r = e.p;
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("p_le_wfrac", "p <= w/sqrt(w^2+1), w = (e^j - 1)/2", 2, scope_all, none,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p;
                       r = over_hypot1(w_of(e));
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("wfrac_le_sqrt2_jstar", "w/sqrt(w^2+1) <= sqrt(2) j*", 2, scope_all, none,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = over_hypot1(w_of(e));
                       r = kSqrt2 * e.jstar;
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("bounded_jstar_lower", "j* >= |x-y|/d(G) on bounded G", 2, scope_bounded, none,
                   [](const CaseContext& ctx, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.b / ctx.G->diameter();
                       r = e.jstar;
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("p_over_sqrt2_le_s", "p/sqrt(2) <= s", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p / kSqrt2;
                       r = e.s.value;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("s_le_2p", "s <= 2 p", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = 2 * e.p;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("s_le_p_frac", "s <= p/(1-p)", 2, scope_all, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       if (e.p >= 1.0) return false;
                       l = e.s.value;
                       r = e.p / (1 - e.p);
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));

    // chain on the ball: th(rho/4) <= s <= p <= th(rho/2) <= 2 th(rho/4)
    R.push_back(mk("ball_thrho4_le_s", "th(rho/4) <= s on B^n", 2, scope_ball, needs_s_rho,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = std::tanh(0.25 * e.rho);
                       r = e.s.value;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("ball_s_le_p", "s <= p on B^n", 2, scope_ball, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = e.p;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("ball_p_le_thrho2", "p <= th(rho/2) on B^n", 2, scope_ball, needs_rho,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p;
                       r = std::tanh(0.5 * e.rho);
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("ball_thrho2_le_2thrho4", "th(rho/2) <= 2 th(rho/4)", 2, scope_ball, needs_rho,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = std::tanh(0.5 * e.rho);
                       r = 2 * std::tanh(0.25 * e.rho);
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("p_le_thj", "th(j/2) <= p <= th(j)", 2, scope_all, none,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p;
                       r = tanh_log1p(e.b / std::min(e.dx, e.dy));
                       sl = 1e-9;
                       return true;
                   }));

    // convex chain: th(j/2) <= s <= |x-y|/sqrt(|x-y|^2+4m^2) <= th(j)
    R.push_back(mk("convex_thjhalf_le_s", "th(j/2) <= s on convex G", 2, scope_convex, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.jstar;
                       r = e.s.value;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_s_le_mratio", "s <= |x-y|/sqrt(|x-y|^2+4m^2) on convex G", 2,
                   scope_convex, needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = over_hypot1(w_of(e));
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_mratio_le_thj", "|x-y|/sqrt(|x-y|^2+4m^2) <= th(j)", 2, scope_convex,
                   none,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = over_hypot1(w_of(e));
                       r = tanh_log1p(e.b / std::min(e.dx, e.dy));
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_v_ge_s", "v >= s on convex G", 2, scope_convex, needs_sv,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = e.v.value;
                       sl = e.s.error_bound + e.v.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_s_le_sqrt2_jstar", "s <= sqrt(2) j* on convex G", 2, scope_convex,
                   needs_s,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.s.value;
                       r = kSqrt2 * e.jstar;
                       sl = e.s.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_v_ge_p_over_sqrt2", "v >= p/sqrt(2) on convex G", 2, scope_convex,
                   needs_v,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p / kSqrt2;
                       r = e.v.value;
                       sl = e.v.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("bh_v_ge_p", "v >= p on a half space or ball", 2, scope_ball_or_halfspace,
                   needs_v,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.p;
                       r = e.v.value;
                       sl = e.v.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("convex_v_ge_Cp", "v >= C p on convex G, C = 0.73707...", 2, scope_convex,
                   needs_v,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = 0.737 * e.p; // slightly below the sharp constant; see strip_constant()
                       r = e.v.value;
                       sl = e.v.error_bound + 1e-9;
                       return true;
                   }));

    // s and v comparisons
    R.push_back(mk("sin_vhalf_le_s", "s >= sin(v/2)", 3, scope_all, needs_sv,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = std::sin(0.5 * e.v.value);
                       r = e.s.value;
                       sl = e.s.error_bound + 0.5 * e.v.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("sin_v_le_dist_ratio", "sin(v) <= |x-y|/d(x) for y in B(x,d(x))", 3, scope_all,
                   needs_v,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       double da = std::max(e.dx, e.dy);
                       if (e.b >= da) return false;
                       l = std::sin(e.v.value);
                       r = e.b / da;
                       sl = e.v.error_bound + 1e-9;
                       return true;
                   }));
    R.push_back(mk("lawcos_upper",
                   "s <= (|x-y|/d(x)) / (1 + cos v + sqrt((|x-y|/d(x))^2 - sin^2 v))", 3,
                   scope_planar, needs_sv,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       if (e.b == 0) return false;
                       double t = e.b / std::min(e.dx, e.dy);
                       double sv = std::sin(e.v.value);
                       double rad = t * t - sv * sv;
                       if (rad < -1e-10) { // solver-accuracy failure, reported as violation
                           l = -rad;
                           r = 1e-10;
                           sl = 0;
                           return true;
                       }
                       l = e.s.value;
                       r = lawcos_rhs(t, e.v.value);
                       double r_hi = lawcos_rhs(t, std::min(kPi, e.v.value + e.v.error_bound));
                       sl = e.s.error_bound + (r_hi - r) + 1e-9;
                       return true;
                   }));
    // the sin-form "sin v >= (delta/2) j*" fails for v > pi/2 (sin is not
    // monotone on [0,pi]); the tangent-circle argument bounds an auxiliary
    // angle <= v, so the robust form is v >= arcsin((delta/2) j*), which is
    // equivalent whenever v <= pi/2
    R.push_back(mk("hdelta_ball_sin_v", "v >= arcsin((delta/2) j*) under H(delta), delta = 0.45",
                   3, scope_ball2, needs_v,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = std::asin(std::min(1.0, 0.5 * 0.45 * e.jstar));
                       r = e.v.value;
                       sl = e.v.error_bound + 1e-9;
                       return true;
                   }));
    {
        InequalityCase c = mk(
            "nonlinearity_koch_v", "v > arctan((delta/6) s) under the nonlinearity condition", 3,
            scope_koch, CaseNeeds{true, true, false, false, true},
            [](const CaseContext& ctx, const PairEval& e, double& l, double& r, double& sl) {
                if (e.s.value + e.s.error_bound >= 1.0) return false;
                l = std::atan(ctx.delta_hat / 6.0 * e.s.value);
                r = e.v.value;
                sl = ctx.delta_hat / 6.0 * e.s.error_bound + e.v.error_bound + 1e-9;
                return true;
            });
        c.samples_override = 1000;
        R.push_back(c);
    }

    // quasihyperbolic cases; numeric k needs grid clearance, so these run on
    // reduced sample counts with a boundary-distance floor
    auto k_case = [&](std::string id, std::string anchor,
                      std::function<bool(const Domain&)> scope, CaseNeeds needs, EvalFn eval,
                      long override_n, double min_bd) {
        InequalityCase c = mk(std::move(id), std::move(anchor), 2, std::move(scope), needs,
                              std::move(eval));
        c.samples_override = override_n;
        c.min_bd_frac = min_bd;
        return c;
    };
    R.push_back(k_case("jk_ball", "j <= k", scope_ball2, needs_k,
                       [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                           l = e.j;
                           r = e.k.value;
                           sl = e.k.error_bound + 1e-9;
                           return true;
                       },
                       1000, 0.08));
    R.push_back(mk("jk_halfspace", "j <= k (k exact on H^n)", 2, scope_halfspace, needs_k,
                   [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                       l = e.j;
                       r = e.k.value;
                       sl = 1e-9;
                       return true;
                   }));
    R.push_back(k_case("jk_strip", "j <= k", scope_strip, needs_k,
                       [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                           l = e.j;
                           r = e.k.value;
                           sl = e.k.error_bound + 1e-9;
                           return true;
                       },
                       300, 0.08));
    R.push_back(k_case("rok_lower", "rho <= 2k on B^n", scope_ball2, needs_k_rho,
                       [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                           l = e.rho;
                           r = 2 * e.k.value;
                           sl = 2 * e.k.error_bound + 1e-9;
                           return true;
                       },
                       1000, 0.08));
    R.push_back(k_case("rok_upper", "2k <= 2 rho on B^n", scope_ball2, needs_k_rho,
                       [](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                           l = 2 * e.k.value;
                           r = 2 * e.rho;
                           sl = 2 * e.k.error_bound + 1e-9;
                           return true;
                       },
                       1000, 0.08));
    for (double lam : {0.1, 0.5, 0.9}) {
        char id[32];
        std::snprintf(id, sizeof id, "vu37_lam%02d", static_cast<int>(lam * 10 + 0.5));
        InequalityCase c = k_case(
            id, "k <= j/(1-lambda) for y in B(x, lambda d(x))", scope_ball2, needs_k,
            [lam](const CaseContext&, const PairEval& e, double& l, double& r, double& sl) {
                l = e.k.value;
                r = e.j / (1 - lam);
                sl = e.k.error_bound + 1e-9;
                return true;
            },
            300, 0.08);
        c.sampler = CaseSampler::LambdaBall;
        c.lambda = lam;
        R.push_back(c);
    }
    {
        const double lam = 0.5;
        const double factor = (1 + lam) / (1 - lam);
        const double c_const = 1.0 / std::tanh(factor * std::log1p(lam));
        R.push_back(k_case("s_le_c_th_k_ball",
                           "s <= c th((1+lambda)/(1-lambda) k), lambda = 1/2", scope_ball2,
                           needs_sk,
                           [factor, c_const](const CaseContext&, const PairEval& e, double& l,
                                             double& r, double& sl) {
                               l = e.s.value;
                               r = c_const * std::tanh(factor * e.k.value);
                               sl = e.s.error_bound + 1e-9; // k over-estimate only inflates rhs
                               return true;
                           },
                           1000, 0.08));
        R.push_back(mk("s_le_c_th_k_halfspace",
                       "s <= c th((1+lambda)/(1-lambda) k), lambda = 1/2", 2, scope_halfspace,
                       CaseNeeds{true, false, true, false, false},
                       [factor, c_const](const CaseContext&, const PairEval& e, double& l,
                                         double& r, double& sl) {
                           l = e.s.value;
                           r = c_const * std::tanh(factor * e.k.value);
                           sl = e.s.error_bound + 1e-9;
                           return true;
                       }));
    }
    return R;
}

} // namespace

double lawcos_rhs(double t, double v) {
    if (t == 0) return 0;
    double sv = std::sin(v);
    double cv = std::cos(v);
    double rad = t * t - sv * sv;
    if (rad < 0) rad = 0;
    return t / (1 + cv + std::sqrt(rad));
}

const std::vector<InequalityCase>& registry() {
    static const std::vector<InequalityCase> R = make_registry();
    return R;
}

std::vector<Domain> default_suite_domains() {
    return {
        Domain::ball(Point(0, 0), 1.0),
        Domain::half_space(2),
        Domain::strip(),
        Domain::convex_polygon({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}),
        Domain::punctured_space(Point(0, 0)),
        Domain::koch(6),
    };
}

namespace {

VerificationReport report_from(const std::string& id, const std::string& domain, long samples,
                               std::uint64_t seed, const VerificationOutcome& o) {
    VerificationReport r;
    r.case_id = id;
    r.domain = domain;
    r.samples = samples;
    r.seed = seed;
    r.max_violation = o.checked == 0 ? -1.0 : std::max(o.max_violation, -1e12);
    r.witnesses = o.witnesses;
    r.pass = o.violations == 0;
    return r;
}

std::vector<VerificationReport> sweep_domain(const Domain& G,
                                             const std::vector<const InequalityCase*>& cases,
                                             long default_samples, std::uint64_t seed,
                                             const SupSolverConfig& sup,
                                             const GeodesicGraphConfig& grid) {
    CaseContext ctx;
    ctx.G = &G;
    for (const auto* c : cases)
        if (c->needs.delta_hat && ctx.delta_hat == 0)
            ctx.delta_hat = nonlinearity_delta_estimate(G, 2000, 7);

    // group cases sharing a sampler configuration so each pair bundle is
    // built (and its s/v/k solved) once
    using Key = std::tuple<int, double, double, long>;
    std::map<Key, std::vector<const InequalityCase*>> groups;
    for (const auto* c : cases) {
        long n = c->samples_override > 0 ? std::min(c->samples_override, default_samples)
                                         : default_samples;
        groups[{static_cast<int>(c->sampler), c->lambda, c->min_bd_frac, n}].push_back(c);
    }

    std::map<std::string, VerificationReport> by_id;
    for (auto& [key, members] : groups) {
        auto [sampler_i, lambda, min_bd_frac, n] = key;
        CaseNeeds needs;
        for (const auto* c : members) {
            needs.s |= c->needs.s;
            needs.v |= c->needs.v;
            needs.k |= c->needs.k;
            needs.rho |= c->needs.rho;
        }
        std::vector<PairEval> bundle =
            build_bundle(G, n, seed, static_cast<CaseSampler>(sampler_i), lambda, min_bd_frac,
                         needs, sup, grid);
        for (const auto* c : members) {
            VerificationOutcome o;
            for (const PairEval& e : bundle) {
                double lhs, rhs, slack;
                if (c->eval(ctx, e, lhs, rhs, slack)) o.record(e.x, e.y, lhs, rhs, slack);
            }
            by_id.emplace(c->id, report_from(c->id, G.descriptor(), n, seed, o));
        }
    }

    std::vector<VerificationReport> out;
    out.reserve(cases.size());
    for (const auto* c : cases) out.push_back(by_id.at(c->id));
    return out;
}

} // namespace

VerificationReport run_case(const InequalityCase& c, const Domain& G, long samples,
                            std::uint64_t seed, const SupSolverConfig& sup,
                            const GeodesicGraphConfig& grid) {
    if (!c.in_scope(G))
        throw std::invalid_argument("run_case: domain out of scope for case " + c.id);
    std::vector<const InequalityCase*> one{&c};
    return sweep_domain(G, one, samples, seed, sup, grid).front();
}

std::vector<VerificationReport> sharpness_suite() {
    std::vector<VerificationReport> out;
    auto add = [&](const std::string& id, const std::string& domain, const Point& x,
                   const Point& y, double actual, double expected, double tol) {
        VerificationOutcome o;
        o.record(x, y, std::abs(actual - expected), 0.0, tol);
        out.push_back(report_from(id, domain, 1, 0, o));
        out.back().samples = 1;
    };

    SupSolverConfig sup;

    { // R^n \ {0}, collinear ray pair: s = j* = (t-1)/(t+1)
        Domain G = Domain::punctured_space(Point(0, 0));
        Point x(1, 0), y(3, 0);
        double expect = 0.5;
        add("sharp_ray_jstar", G.descriptor(), x, y, j_star(G, x, y).value, expect, 1e-15);
        add("sharp_ray_s_solver", G.descriptor(), x, y, s_metric(G, x, y, sup).value, expect, 1e-9);
    }
    { // y = -x: p = 1/sqrt(2), j* = 1/2
        Domain G = Domain::punctured_space(Point(0, 0));
        Point x(0.7, 0), y(-0.7, 0);
        add("sharp_antipodal_p", G.descriptor(), x, y, p_function(G, x, y).value,
            1.0 / std::sqrt(2.0), 1e-12);
        add("sharp_antipodal_jstar", G.descriptor(), x, y, j_star(G, x, y).value, 0.5, 1e-12);
    }
    { // y = x/|x|^2 collinear: j* = p = (|x|^2-1)/(|x|^2+1)
        Domain G = Domain::punctured_space(Point(0, 0));
        Point x(2, 0), y(0.5, 0);
        double expect = (4.0 - 1.0) / (4.0 + 1.0);
        add("sharp_inversion_jstar", G.descriptor(), x, y, j_star(G, x, y).value, expect, 1e-12);
        add("sharp_inversion_p", G.descriptor(), x, y, p_function(G, x, y).value, expect, 1e-12);
    }
    { // strip pair (0,t),(0,-t): p = t/sqrt(t^2+(1-t)^2), v = arcsin t
        Domain S = Domain::strip();
        double t = 0.5;
        Point a(0, t), b(0, -t);
        add("sharp_strip_p", S.descriptor(), a, b, p_function(S, a, b).value,
            t / std::sqrt(t * t + (1 - t) * (1 - t)), 1e-14);
        add("sharp_strip_v", S.descriptor(), a, b, v_metric(S, a, b, sup).value, std::asin(t),
            1e-8);
    }
    { // equality cases: s = 1 forces v = pi; the v = 0 limit of the
      // law-of-cosines bound is |x-y|/(|x-y|+2d(x))
        Domain G = Domain::punctured_space(Point(0, 0));
        Point x(0.4, 0), y(-0.4, 0);
        add("sharp_s1_forces_v_pi", G.descriptor(), x, y, v_metric(G, x, y, sup).value, kPi, 0.0);
        add("sharp_s1_value", G.descriptor(), x, y, s_metric(G, x, y, sup).value, 1.0, 1e-12);
        VerificationOutcome o;
        for (double t : {0.1, 0.5, 2.0, 10.0})
            o.record(Point(t, 0), Point(0, 0), std::abs(lawcos_rhs(t, 0.0) - t / (2 + t)), 0.0,
                     1e-15);
        out.push_back(report_from("sharp_v0_limit", "formula", 4, 0, o));
    }
    return out;
}

std::vector<VerificationReport> section4_suite(long samples, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    MapSpec cayley = MapSpec::cayley_ball_to_halfspace(2);
    MapSpec cayley_inv = MapSpec::cayley_halfspace_to_ball(2);
    MapSpec sigma = MapSpec::ball_automorphism(Point(0.3, 0.2));
    Domain ball = Domain::ball(Point(0, 0), 1.0);

    DistortionOptions opt;
    opt.samples = samples;
    opt.seed = seed;

    auto add = [&](const std::string& id, const MapSpec& f, const VerificationOutcome& o,
                   long n) {
        out.push_back(report_from(id, f.source_domain().descriptor() + "->" +
                                          f.image_domain().descriptor(),
                                  n, seed, o));
    };

    add("s4_s_mobius_cayley", cayley, check_s_mobius_bound(cayley, opt), samples);
    add("s4_s_mobius_sigma", sigma, check_s_mobius_bound(sigma, opt), samples);
    add("s4_p_part1", cayley, check_p_mobius_bounds(cayley, 1, opt), samples);
    add("s4_p_part2", sigma, check_p_mobius_bounds(sigma, 2, opt), samples);
    add("s4_p_part3", cayley_inv, check_p_mobius_bounds(cayley_inv, 3, opt), samples);

    DistortionOptions jk_opt = opt;
    add("s4_jk_cayley", cayley, check_mobius_j_k_distortion(cayley, ball, jk_opt), samples);
    jk_opt.k_samples = std::max<long>(100, samples / 10);
    add("s4_jk_sigma", sigma, check_mobius_j_k_distortion(sigma, ball, jk_opt), samples);

    add("s4_qr_K1", MapSpec::radial_stretch(1.0, 2), check_qr_holder_bound(1.0, opt), samples);
    add("s4_qr_K2", MapSpec::radial_stretch(2.0, 2), check_qr_holder_bound(2.0, opt), samples);
    return out;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const HarnessConfig& cfg) {
    std::vector<VerificationReport> out;
    bool want_registry = true;
    int section_filter = 0;
    std::string id_filter;

    if (suite == "sharpness") return sharpness_suite();
    if (suite == "section4") return section4_suite(cfg.samples, cfg.seeds.front());
    if (suite == "section2") section_filter = 2;
    else if (suite == "section3") section_filter = 3;
    else if (suite != "all") id_filter = suite;

    std::vector<const InequalityCase*> selected;
    for (const auto& c : registry()) {
        if (section_filter && c.section != section_filter) continue;
        if (!id_filter.empty() && c.id != id_filter) continue;
        selected.push_back(&c);
    }
    if (selected.empty() && want_registry && !id_filter.empty())
        throw std::invalid_argument("unknown suite or case id: " + suite);

    for (const Domain& G : default_suite_domains()) {
        std::vector<const InequalityCase*> in_scope;
        for (const auto* c : selected)
            if (c->in_scope(G)) in_scope.push_back(c);
        if (in_scope.empty()) continue;
        for (std::uint64_t seed : cfg.seeds) {
            auto reports = sweep_domain(G, in_scope, cfg.samples, seed, cfg.sup, cfg.grid);
            out.insert(out.end(), reports.begin(), reports.end());
        }
    }

    if (suite == "all") {
        auto sharp = sharpness_suite();
        out.insert(out.end(), sharp.begin(), sharp.end());
        auto s4 = section4_suite(cfg.samples, cfg.seeds.front());
        out.insert(out.end(), s4.begin(), s4.end());
    }
    return out;
}

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
    nlohmann::ordered_json jw;
    auto coords = [](const Point& p) {
        std::vector<double> v(p.dim());
        for (int i = 0; i < p.dim(); ++i) v[i] = p[i];
        return v;
    };
    jw["x"] = coords(w.x);
    jw["y"] = coords(w.y);
    jw["lhs"] = w.lhs;
    jw["rhs"] = w.rhs;
    return jw;
}

} // namespace

std::string report_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json jr;
        jr["case"] = r.case_id;
        jr["domain"] = r.domain;
        jr["samples"] = r.samples;
        jr["seed"] = r.seed;
        jr["max_violation"] = r.max_violation;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
        jr["witnesses"] = ws;
        jr["verdict"] = r.pass ? "pass" : "fail";
        arr.push_back(jr);
    }
    return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<VerificationReport>& reports) {
    std::string s = "case,domain,samples,seed,max_violation,witnesses,verdict\n";
    char buf[512];
    for (const auto& r : reports) {
        // domain descriptors contain commas; keep them quoted
        std::snprintf(buf, sizeof buf, "%s,\"%s\",%ld,%llu,%.12g,%zu,%s\n", r.case_id.c_str(),
                      r.domain.c_str(), r.samples, static_cast<unsigned long long>(r.seed),
                      r.max_violation, r.witnesses.size(), r.pass ? "pass" : "fail");
        s += buf;
    }
    return s;
}

void emit_report(const std::vector<VerificationReport>& reports, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "json") body = report_json(reports);
    else if (format == "csv") body = report_csv(reports);
    else throw std::invalid_argument("emit_report: format must be json or csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("emit_report: cannot open " + path);
    f << body;
    if (!f) throw std::runtime_error("emit_report: write failed for " + path);
}

} // namespace hypmet
