#pragma once

#include <cmath>
#include <span>

namespace svt::detail {

// Neumaier compensated summation. Keeps the relative error of long sums near
// machine epsilon, which the prefix-sum machinery relies on at n ~ 1e6.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) noexcept {
    NeumaierSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

} // namespace svt::detail
