#pragma once

#include "svt/sample.hpp"

namespace svt {

// Empirical stop-loss moment of one sample: (1/n) * sum (x - target)^power
// over x strictly above the target. power == 2 is the upper semivariance.
struct SemivarianceEstimate {
    double target = 0.0;
    double value = 0.0;
    double power = 2.0;
};

SemivarianceEstimate semivariance(const Sample& s, double target);

// Generalized version with an arbitrary positive power. Throws
// NonPositivePowerError for power <= 0.
SemivarianceEstimate stop_loss_moment(const Sample& s, double target, double power);

} // namespace svt
