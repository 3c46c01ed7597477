#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace svt {

// One validated batch of observations from one of the two populations.
// Immutable after construction; safe to share across threads.
class Sample {
public:
    // Validates and takes ownership of `values`. Non-finite entries are always
    // rejected; negative entries are rejected unless `allow_negative` is set.
    explicit Sample(std::vector<double> values, std::string label = {},
                    bool allow_negative = false);

    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
    std::string label_;
};

// Factory spelling of the validation contract.
Sample validate_sample(std::vector<double> raw, bool allow_negative = false,
                       std::string label = {});

// Convention for the empirical CDF at a point that carries data mass.
enum class CdfConvention {
    left,  // (1/n) * #{ v < t }
    right, // (1/n) * #{ v <= t }
};

double empirical_cdf(const Sample& s, double t, CdfConvention convention);

// The two samples glued together. Pooled index i maps to x for i < n1 and to
// y for i >= n1 (zero-based).
class PooledSample {
public:
    PooledSample(Sample x, Sample y);

    const Sample& x() const noexcept { return x_; }
    const Sample& y() const noexcept { return y_; }
    std::size_t n1() const noexcept { return x_.size(); }
    std::size_t n2() const noexcept { return y_.size(); }
    std::size_t n() const noexcept { return x_.size() + y_.size(); }

    double value(std::size_t pooled_index) const;
    std::vector<double> values() const;

private:
    Sample x_;
    Sample y_;
};

// Sorted copy of a batch of values with compensated prefix sums of the values
// and of their squares, plus tie-group boundaries. Supports the strict
// indicator sums behind the fast estimator path in O(log n) per query.
class SortedIndex {
public:
    explicit SortedIndex(std::span<const double> values);
    explicit SortedIndex(const Sample& s);

    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& sorted() const noexcept { return sorted_; }

    // Starts of the maximal runs of tied values, terminated by size().
    const std::vector<std::size_t>& tie_group_starts() const noexcept { return group_starts_; }

    double total() const noexcept { return prefix_value_.back(); }
    double total_squares() const noexcept { return prefix_square_.back(); }

    // Strict comparisons throughout, matching the indicators in the kernel.
    std::size_t count_below(double t) const noexcept;
    std::size_t count_above(double t) const noexcept;
    double sum_below(double t) const noexcept;
    double sum_above(double t) const noexcept;
    double sum_squares_below(double t) const noexcept;
    double sum_squares_above(double t) const noexcept;

private:
    std::vector<double> sorted_;
    std::vector<double> prefix_value_;  // size()+1 entries, prefix_value_[k] = sum of first k
    std::vector<double> prefix_square_;
    std::vector<std::size_t> group_starts_;
};

double empirical_cdf(const SortedIndex& index, double t, CdfConvention convention);

} // namespace svt
