#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypmet/boundary_sup.hpp"
#include "hypmet/domain.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/quasihyperbolic.hpp"
#include "hypmet/verification.hpp"

namespace hypmet {

/// Per-domain constants available to case expressions.
struct CaseContext {
    const Domain* G = nullptr;
    double delta_hat = 0; // empirical nonlinearity constant (Koch)
};

/// Per-pair metric bundle. Closed forms are always present; s, v, k only
/// when some case in the sweep needs them.
struct PairEval {
    Point x, y;
    double b = 0;          // |x - y|
    double dx = 0, dy = 0; // boundary distances
    double j = 0, jstar = 0, p = 0;
    double rho = 0;
    bool has_rho = false;
    MetricValue s, v, k;
    bool has_s = false, has_v = false, has_k = false;
};

enum class CaseSampler { Stratified, LambdaBall };

struct CaseNeeds {
    bool s = false, v = false, k = false, rho = false, delta_hat = false;
};

/// One paper result as a falsifiable lhs <= rhs predicate with its slack
/// rule. Slack composition accounts for solver bias: s and v are inner
/// (under-)estimates, graph k an over-estimate.
struct InequalityCase {
    std::string id;
    std::string anchor; // human-readable statement of the result
    int section = 2;    // suite grouping: 2 = metric comparisons, 3 = s/v theory
    std::function<bool(const Domain&)> in_scope;
    CaseNeeds needs;
    CaseSampler sampler = CaseSampler::Stratified;
    double lambda = 0;        // LambdaBall radius fraction
    long samples_override = 0; // 0 = suite default
    double min_bd_frac = 0;    // boundary-distance floor as a fraction of scale

    /// Returns false when the sample is out of the case's hypotheses.
    std::function<bool(const CaseContext&, const PairEval&, double& lhs, double& rhs,
                       double& slack)>
        eval;
};

struct VerificationReport {
    std::string case_id;
    std::string domain;
    long samples = 0;
    std::uint64_t seed = 0;
    double max_violation = 0; // post-slack; pass <=> <= 0
    std::vector<Witness> witnesses;
    bool pass = true;
};

/// The full inequality registry (>= 18 cases), one entry per result.
const std::vector<InequalityCase>& registry();

/// Domains the suite sweeps: Ball, HalfSpace, Strip, unit square,
/// PuncturedSpace, KochPolygon(6).
std::vector<Domain> default_suite_domains();

struct HarnessConfig {
    long samples = 10000;
    std::vector<std::uint64_t> seeds = {42, 43, 44};
    SupSolverConfig sup;
    GeodesicGraphConfig grid;
};

VerificationReport run_case(const InequalityCase& c, const Domain& G, long samples,
                            std::uint64_t seed, const SupSolverConfig& sup = {},
                            const GeodesicGraphConfig& grid = {});

/// suite: all | section2 | section3 | section4 | sharpness | <case id>
std::vector<VerificationReport> run_suite(const std::string& suite, const HarnessConfig& cfg);

/// Exact-value regressions at the paper's extremal configurations.
std::vector<VerificationReport> sharpness_suite();

/// Moebius / quasiregular distortion sweeps, packaged as reports.
std::vector<VerificationReport> section4_suite(long samples, std::uint64_t seed);

std::string report_json(const std::vector<VerificationReport>& reports);
std::string report_csv(const std::vector<VerificationReport>& reports);
void emit_report(const std::vector<VerificationReport>& reports, const std::string& format,
                 const std::string& path);

/// Upper bound of Theorem (law of cosines): t/(1+cos v+sqrt(t^2-sin^2 v))
/// with t = |x-y|/d(x); the radicand is clamped at -1e-10.
double lawcos_rhs(double t, double v);

} // namespace hypmet
