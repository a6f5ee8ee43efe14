#pragma once

#include <cstdint>
#include <vector>

#include "hypmet/domain.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

/// One (z, r) draw of a boundary-condition trial. On pass, the ball
/// B(w, delta r) fits inside B(z, r) minus G with `margin` to spare.
struct ConditionWitness {
    Point z;
    double r = 0;
    bool pass = false;
    bool has_witness = false;
    Point w;
    double margin = 0; // min(clearance, r - |w-z|) - delta*r at the witness
};

/// Exterior-ball condition H(delta): for every boundary ball B(z,r) there is
/// a complement ball B(w, delta r) inside B(z,r) \ G. Samples `trials`
/// random (z, r) draws; witness search is a spiral candidate grid followed
/// by local hill-climbing. Sampling evidence, not a proof.
/// Unbounded domains draw r in (0, r_cap); r_cap is echoed by the CLI.
std::vector<ConditionWitness> h_delta_check(const Domain& G, double delta, long trials,
                                            std::uint64_t seed, double r_cap = 10.0);

/// Empirical nonlinearity constant: min over random (z, r, line L) of the
/// max normalized distance of boundary points in B(z,r) from L. Radii are
/// drawn log-uniformly in [0.05 d(G), d(G)) so finite polygon depth stays
/// below the probed feature scale. Labeled ESTIMATE: the condition
/// quantifies over all (z, r, L).
double nonlinearity_delta_estimate(const Domain& G, long trials, std::uint64_t seed);

/// Objective t -> arcsin(t) * sqrt(t^2 + (1-t)^2) / t whose infimum over
/// (0,1) is the sharp convex-domain constant in v >= C p.
double strip_ratio_objective(double t);

/// inf_{t in (0,1)} of the above, by coarse scan + golden section
/// (bracket 1e-10). Reference value 0.73707...
double strip_constant();

} // namespace hypmet
