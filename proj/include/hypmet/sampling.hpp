#pragma once

#include <cstdint>

#include "hypmet/domain.hpp"
#include "hypmet/point.hpp"
#include "hypmet/rng.hpp"

namespace hypmet {

/// Uniform-ish interior point of G, restricted to a desk-scale window for
/// unbounded variants. min_bd floors the boundary distance (grid solvers
/// need clearance).
Point sample_point_in(const Domain& G, SplitMix64& rng, double min_bd = 0.0);

enum class PairStratum {
    Uniform,
    NearBoundary,   // d(x) < 0.01 * scale
    NearCoincident, // |x-y| < 0.01 * scale
};

/// Stratum for sample index i: deciles 0 -> near-boundary, 1 -> near-
/// coincident, rest uniform, so every 10 samples contain one of each.
inline PairStratum stratum_for_index(std::uint64_t i) {
    switch (i % 10) {
    case 0: return PairStratum::NearBoundary;
    case 1: return PairStratum::NearCoincident;
    default: return PairStratum::Uniform;
    }
}

struct PairSampleXY {
    Point x, y;
};

PairSampleXY sample_pair(const Domain& G, SplitMix64& rng, PairStratum stratum,
                         double min_bd = 0.0);

/// Pair with y in B(x, lambda d(x)) (for the k_G <= j_G/(1-lambda) lemma).
PairSampleXY sample_pair_lambda_ball(const Domain& G, SplitMix64& rng, double lambda,
                                     double min_bd = 0.0);

} // namespace hypmet
