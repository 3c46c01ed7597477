#include "svt/semivariance.hpp"

#include <algorithm>
#include <cmath>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"

namespace svt {
namespace {

// Sorted ascending summation keeps the accumulation error flat out to 1e6
// points; the Neumaier pass covers the rest.
double mean_excess_power(const Sample& s, double target, double power) {
    std::vector<double> sorted = s.values();
    std::sort(sorted.begin(), sorted.end());

    detail::NeumaierSum acc;
    auto it = std::upper_bound(sorted.begin(), sorted.end(), target);
    for (; it != sorted.end(); ++it) {
        const double excess = *it - target;
        if (power == 2.0) {
            acc.add(excess * excess);
        } else if (power == 1.0) {
            acc.add(excess);
        } else {
            acc.add(std::pow(excess, power));
        }
    }
    return acc.value() / static_cast<double>(s.size());
}

} // namespace

SemivarianceEstimate semivariance(const Sample& s, double target) {
    if (!std::isfinite(target)) throw OutOfRangeError("semivariance target must be finite");
    return SemivarianceEstimate{target, mean_excess_power(s, target, 2.0), 2.0};
}

SemivarianceEstimate stop_loss_moment(const Sample& s, double target, double power) {
    if (!(power > 0.0)) throw NonPositivePowerError(power);
    if (!std::isfinite(target)) throw OutOfRangeError("stop-loss target must be finite");
    return SemivarianceEstimate{target, mean_excess_power(s, target, power), power};
}

} // namespace svt
