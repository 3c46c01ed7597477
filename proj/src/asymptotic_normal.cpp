#include "svt/asymptotic_normal.hpp"

#include <cmath>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"
#include "svt/special_functions.hpp"
#include "svt/ustat.hpp"

namespace svt {

double psi_plugin(const SortedIndex& pooled_index, double x) {
    const double n = static_cast<double>(pooled_index.size());
    const double cdf_strict = static_cast<double>(pooled_index.count_below(x)) / n;
    return x * x * cdf_strict - (2.0 * x / n) * pooled_index.sum_below(x) -
           pooled_index.sum_squares_above(x) / n;
}

double psi_plugin(const PooledSample& pooled, double x) {
    return psi_plugin(SortedIndex(std::span<const double>(pooled.values())), x);
}

NormalTestResult normal_test(const Sample& x, const Sample& y, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw OutOfRangeError("significance level must lie in (0, 1)");
    }
    if (x.size() < 2 || y.size() < 2) {
        throw InsufficientSampleError("normal test needs at least 2 observations per sample");
    }

    const DeltaEstimate delta = delta_fast(x, y);
    const PooledSample pooled(x, y);
    const std::vector<double> values = pooled.values();
    const SortedIndex index{std::span<const double>(values)};

    const std::size_t n = pooled.n();
    std::vector<double> psi(n);
    for (std::size_t i = 0; i < n; ++i) psi[i] = psi_plugin(index, values[i]);

    detail::NeumaierSum mean_acc;
    for (double v : psi) mean_acc.add(v);
    const double mean = mean_acc.value() / static_cast<double>(n);
    detail::NeumaierSum var_acc;
    for (double v : psi) var_acc.add((v - mean) * (v - mean));
    const double psi_variance = var_acc.value() / static_cast<double>(n - 1);
    if (!(psi_variance > 0.0)) throw DegenerateVarianceError();

    NormalTestResult result;
    result.alpha = alpha;
    result.delta = delta.value;
    result.p_hat = static_cast<double>(x.size()) / static_cast<double>(n);
    result.s2 = 4.0 / (result.p_hat * (1.0 - result.p_hat)) * psi_variance;
    result.z = std::sqrt(static_cast<double>(n)) * delta.value / std::sqrt(result.s2);
    result.p_value = 2.0 * normal_sf(std::abs(result.z));
    result.reject = std::abs(result.z) > normal_quantile(1.0 - 0.5 * alpha);
    return result;
}

} // namespace svt
