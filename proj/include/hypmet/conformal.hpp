#pragma once

#include <cstdint>
#include <vector>

#include "hypmet/boundary_sup.hpp"
#include "hypmet/maps.hpp"
#include "hypmet/metric_value.hpp"
#include "hypmet/quasihyperbolic.hpp"
#include "hypmet/verification.hpp"

namespace hypmet {

/// Finite-radius estimate of H(f,z) = limsup_{r->0} max/min image-distance
/// ratio over the sphere S(z,r). H is the smallest-radius ratio; trend_ok
/// flags whether the ratio sequence settled instead of extrapolating.
struct DilatationEstimate {
    Point z;
    std::vector<double> radii;  // decreasing
    std::vector<double> ratios; // per-radius max/min ratio, >= 1
    double H = 1;
    bool trend_ok = true;
};

DilatationEstimate linear_dilatation(const MapSpec& f, const Point& z,
                                     std::vector<double> radii = {1e-2, 1e-3, 1e-4},
                                     int directions = 720);

struct DistortionOptions {
    long samples = 10000;
    std::uint64_t seed = 42;
    SupSolverConfig sup;
    GeodesicGraphConfig grid;
    long k_samples = -1; // k-chain sample count; -1 = same as `samples`
};

/// Moebius lemma: j/2 <= j' <= 2j and k/2 <= k' <= 2k for f: G -> fG,
/// G in {B^n, H^n}. j is exact; k is exact on H^n and numeric on B^n, so
/// the k chain runs on the first k_samples pairs.
VerificationOutcome check_mobius_j_k_distortion(const MapSpec& f, const Domain& G,
                                                const DistortionOptions& opt = {});

/// s_G(f(x),f(y)) <= 2 s_B(x,y) / (1 + s_B(x,y)^2) for Moebius f: B^n -> G.
VerificationOutcome check_s_mobius_bound(const MapSpec& f, const DistortionOptions& opt = {});

/// Three-part p distortion theorem for Moebius maps between B^n and H^n.
/// part = 1: B->H, 2: B->B, 3: H->B; bounds are in terms of p of the source.
VerificationOutcome check_p_mobius_bounds(const MapSpec& f, int part,
                                          const DistortionOptions& opt = {});

/// Quasiregular Hoelder bound for the radial stretch of dilatation K on B^2:
/// s(f(x),f(y)) <= lambda_2^{1-alpha} (2s/(1+s^2))^alpha, alpha = 1/K,
/// lambda_2 = 4. Samples avoid |x| < 1e-3 (map is singular at the origin).
VerificationOutcome check_qr_holder_bound(double K, const DistortionOptions& opt = {});

/// max over samples of max(m'(fx,fy)/m(x,y), m(x,y)/m'(fx,fy)).
double empirical_bilipschitz_constant(const MapSpec& f, MetricKind metric, const Domain& G,
                                      long samples, std::uint64_t seed,
                                      const SupSolverConfig& sup = {},
                                      const GeodesicGraphConfig& grid = {});

} // namespace hypmet
