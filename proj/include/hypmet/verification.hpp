#pragma once

#include <vector>

#include "hypmet/point.hpp"

namespace hypmet {

struct Witness {
    Point x, y;
    double lhs = 0;
    double rhs = 0;
};

/// Result of sweeping an inequality over sampled pairs. max_violation is
/// post-slack: a pass means max_violation <= 0.
struct VerificationOutcome {
    long checked = 0;
    long violations = 0;
    double max_violation = -1e300;
    std::vector<Witness> witnesses; // up to 10 worst offenders (or near-misses)

    bool passed() const { return violations == 0; }

    void record(const Point& x, const Point& y, double lhs, double rhs, double slack) {
        ++checked;
        double v = lhs - rhs - slack;
        if (v > max_violation) max_violation = v;
        if (v > 0) {
            ++violations;
            if (witnesses.size() < 10) witnesses.push_back({x, y, lhs, rhs});
        }
    }
};

} // namespace hypmet
