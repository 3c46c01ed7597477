#include "svt/sample.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"

namespace svt {

Sample::Sample(std::vector<double> values, std::string label, bool allow_negative)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) throw EmptyInputError();
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) throw NonFiniteValueError(i);
        if (values_[i] < 0.0 && !allow_negative) throw NegativeValueError(i);
    }
}

Sample validate_sample(std::vector<double> raw, bool allow_negative, std::string label) {
    return Sample(std::move(raw), std::move(label), allow_negative);
}

double empirical_cdf(const Sample& s, double t, CdfConvention convention) {
    std::size_t count = 0;
    if (convention == CdfConvention::right) {
        for (double v : s.values()) count += (v <= t) ? 1 : 0;
    } else {
        for (double v : s.values()) count += (v < t) ? 1 : 0;
    }
    return static_cast<double>(count) / static_cast<double>(s.size());
}

PooledSample::PooledSample(Sample x, Sample y) : x_(std::move(x)), y_(std::move(y)) {}

double PooledSample::value(std::size_t pooled_index) const {
    if (pooled_index < n1()) return x_[pooled_index];
    return y_[pooled_index - n1()];
}

std::vector<double> PooledSample::values() const {
    std::vector<double> all;
    all.reserve(n());
    all.insert(all.end(), x_.values().begin(), x_.values().end());
    all.insert(all.end(), y_.values().begin(), y_.values().end());
    return all;
}

SortedIndex::SortedIndex(std::span<const double> values)
    : sorted_(values.begin(), values.end()) {
    std::sort(sorted_.begin(), sorted_.end());

    const std::size_t m = sorted_.size();
    prefix_value_.resize(m + 1);
    prefix_square_.resize(m + 1);
    prefix_value_[0] = 0.0;
    prefix_square_[0] = 0.0;
    detail::NeumaierSum value_acc;
    detail::NeumaierSum square_acc;
    for (std::size_t i = 0; i < m; ++i) {
        value_acc.add(sorted_[i]);
        square_acc.add(sorted_[i] * sorted_[i]);
        prefix_value_[i + 1] = value_acc.value();
        prefix_square_[i + 1] = square_acc.value();
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (i == 0 || sorted_[i] != sorted_[i - 1]) group_starts_.push_back(i);
    }
    group_starts_.push_back(m);
}

SortedIndex::SortedIndex(const Sample& s) : SortedIndex(std::span<const double>(s.values())) {}

std::size_t SortedIndex::count_below(double t) const noexcept {
    return static_cast<std::size_t>(
        std::lower_bound(sorted_.begin(), sorted_.end(), t) - sorted_.begin());
}

std::size_t SortedIndex::count_above(double t) const noexcept {
    return sorted_.size() - static_cast<std::size_t>(std::upper_bound(sorted_.begin(),
                                                                      sorted_.end(), t) -
                                                     sorted_.begin());
}

double SortedIndex::sum_below(double t) const noexcept {
    return prefix_value_[count_below(t)];
}

double SortedIndex::sum_above(double t) const noexcept {
    const std::size_t ub = sorted_.size() - count_above(t);
    return prefix_value_.back() - prefix_value_[ub];
}

double SortedIndex::sum_squares_below(double t) const noexcept {
    return prefix_square_[count_below(t)];
}

double SortedIndex::sum_squares_above(double t) const noexcept {
    const std::size_t ub = sorted_.size() - count_above(t);
    return prefix_square_.back() - prefix_square_[ub];
}

double empirical_cdf(const SortedIndex& index, double t, CdfConvention convention) {
    const std::size_t n = index.size();
    const std::size_t count =
        convention == CdfConvention::right ? n - index.count_above(t) : index.count_below(t);
    return static_cast<double>(count) / static_cast<double>(n);
}

} // namespace svt
