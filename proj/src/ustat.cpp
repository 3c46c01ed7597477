#include "svt/ustat.hpp"

#include <cmath>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"

namespace svt {
namespace {

bool all_values_equal(const Sample& x, const Sample& y) {
    const double first = x[0];
    for (double v : x.values()) {
        if (v != first) return false;
    }
    for (double v : y.values()) {
        if (v != first) return false;
    }
    return true;
}

void require_sizes(const Sample& x, const Sample& y, std::size_t min_size) {
    if (x.size() < min_size || y.size() < min_size) {
        throw InsufficientSampleError("need at least " + std::to_string(min_size) +
                                      " observations per sample, got n1=" +
                                      std::to_string(x.size()) + " n2=" +
                                      std::to_string(y.size()));
    }
}

// Sum over ordered pairs of one sample: sum_{i != j} v_i v_j [v_i > v_j].
// Each tie group contributes its value total times the prefix strictly below.
double ordered_pair_sum(const SortedIndex& idx) {
    detail::NeumaierSum acc;
    const auto& sorted = idx.sorted();
    const auto& starts = idx.tie_group_starts();
    for (std::size_t g = 0; g + 1 < starts.size(); ++g) {
        const std::size_t begin = starts[g];
        const std::size_t end = starts[g + 1];
        const double value = sorted[begin];
        const double group_total = value * static_cast<double>(end - begin);
        acc.add(group_total * idx.sum_below(value));
    }
    return acc.value();
}

struct CrossSums {
    double s_b = 0.0;
    double s_c = 0.0;
    double s_d = 0.0;
    double s_e = 0.0;
};

CrossSums cross_sums(const SortedIndex& xi, const SortedIndex& yi) {
    detail::NeumaierSum b;
    detail::NeumaierSum c;
    detail::NeumaierSum d;
    detail::NeumaierSum e;
    for (double xv : xi.sorted()) {
        b.add(xv * yi.sum_above(xv));
        c.add(xv * yi.sum_below(xv));
        d.add(xv * xv * static_cast<double>(yi.count_below(xv)));
    }
    for (double yv : yi.sorted()) {
        e.add(yv * yv * static_cast<double>(xi.count_below(yv)));
    }
    return CrossSums{b.value(), c.value(), d.value(), e.value()};
}

double loo_delta(const DecomposedSums& s) {
    // Same formula as delta_from_sums; kept separate so the leave-one-out
    // callers can pass already-adjusted counts.
    const double n1 = static_cast<double>(s.n1);
    const double n2 = static_cast<double>(s.n2);
    return 2.0 * s.s_yy / (n2 * (n2 - 1.0)) - 2.0 * s.s_xx / (n1 * (n1 - 1.0)) +
           (2.0 / (n1 * n2)) * (s.s_b - s.s_c + s.s_d - s.s_e);
}

} // namespace

double kernel_h(const KernelArgs& a) {
    const double x1 = a.x1;
    const double x2 = a.x2;
    const double y1 = a.y1;
    const double y2 = a.y2;
    double h = 0.0;
    if (y1 > y2) h += y1 * y2;
    if (y2 > y1) h += y1 * y2;
    if (x1 > x2) h -= x1 * x2;
    if (x2 > x1) h -= x1 * x2;
    if (y1 > x1) h += x1 * y1;
    if (y2 > x2) h += x2 * y2;
    if (x1 > y1) h -= x1 * y1;
    if (x2 > y2) h -= x2 * y2;
    if (x1 > y1) h += x1 * x1;
    if (x2 > y2) h += x2 * x2;
    if (y1 > x1) h -= y1 * y1;
    if (y2 > x2) h -= y2 * y2;
    return h;
}

double delta_from_sums(const DecomposedSums& sums) { return loo_delta(sums); }

DeltaEstimate delta_naive(const Sample& x, const Sample& y) {
    require_sizes(x, y, 2);
    const std::size_t n1 = x.size();
    const std::size_t n2 = y.size();

    detail::NeumaierSum acc;
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        for (std::size_t j = i + 1; j < n1; ++j) {
            for (std::size_t k = 0; k + 1 < n2; ++k) {
                for (std::size_t l = k + 1; l < n2; ++l) {
                    // Mean over the two Y pairings makes the statistic
                    // invariant to input ordering.
                    const double h1 = kernel_h({x[i], x[j], y[k], y[l]});
                    const double h2 = kernel_h({x[i], x[j], y[l], y[k]});
                    acc.add(0.5 * (h1 + h2));
                }
            }
        }
    }
    const double pairs =
        0.25 * static_cast<double>(n1) * static_cast<double>(n1 - 1) *
        static_cast<double>(n2) * static_cast<double>(n2 - 1);

    DeltaEstimate est;
    est.value = acc.value() / pairs;
    est.degenerate = all_values_equal(x, y);

    // Direct quadratic evaluation of the six sums.
    DecomposedSums& s = est.sums;
    s.n1 = n1;
    s.n2 = n2;
    for (std::size_t k = 0; k < n2; ++k) {
        for (std::size_t l = 0; l < n2; ++l) {
            if (k != l && y[k] > y[l]) s.s_yy += y[k] * y[l];
        }
    }
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            if (i != j && x[i] > x[j]) s.s_xx += x[i] * x[j];
        }
    }
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t k = 0; k < n2; ++k) {
            if (y[k] > x[i]) s.s_b += x[i] * y[k];
            if (x[i] > y[k]) s.s_c += x[i] * y[k];
            if (x[i] > y[k]) s.s_d += x[i] * x[i];
            if (y[k] > x[i]) s.s_e += y[k] * y[k];
        }
    }
    return est;
}

DeltaEstimate delta_fast(const Sample& x, const Sample& y) {
    require_sizes(x, y, 2);
    const SortedIndex xi(x);
    const SortedIndex yi(y);

    DeltaEstimate est;
    DecomposedSums& s = est.sums;
    s.n1 = x.size();
    s.n2 = y.size();
    s.s_xx = ordered_pair_sum(xi);
    s.s_yy = ordered_pair_sum(yi);
    const CrossSums cross = cross_sums(xi, yi);
    s.s_b = cross.s_b;
    s.s_c = cross.s_c;
    s.s_d = cross.s_d;
    s.s_e = cross.s_e;

    est.value = delta_from_sums(s);
    est.degenerate = all_values_equal(x, y);
    return est;
}

PseudoValues jackknife_pseudovalues(const Sample& x, const Sample& y) {
    require_sizes(x, y, 3);
    const std::size_t n1 = x.size();
    const std::size_t n2 = y.size();
    const std::size_t n = n1 + n2;

    const SortedIndex xi(x);
    const SortedIndex yi(y);

    DecomposedSums full;
    full.n1 = n1;
    full.n2 = n2;
    full.s_xx = ordered_pair_sum(xi);
    full.s_yy = ordered_pair_sum(yi);
    const CrossSums cross = cross_sums(xi, yi);
    full.s_b = cross.s_b;
    full.s_c = cross.s_c;
    full.s_d = cross.s_d;
    full.s_e = cross.s_e;

    const double delta = delta_from_sums(full);
    const double nn = static_cast<double>(n);

    PseudoValues out;
    out.full_delta = delta;
    out.degenerate = all_values_equal(x, y);
    out.nu.resize(n);

    // Deleting one X observation strips its contribution from every sum it
    // touches; the other sample's prefix structure gives each strip in
    // O(log n).
    for (std::size_t a = 0; a < n1; ++a) {
        const double v = x[a];
        DecomposedSums loo = full;
        loo.n1 = n1 - 1;
        loo.s_xx -= v * (xi.sum_below(v) + xi.sum_above(v));
        loo.s_b -= v * yi.sum_above(v);
        loo.s_c -= v * yi.sum_below(v);
        loo.s_d -= v * v * static_cast<double>(yi.count_below(v));
        loo.s_e -= yi.sum_squares_above(v);
        out.nu[a] = nn * delta - (nn - 1.0) * loo_delta(loo);
    }
    for (std::size_t b = 0; b < n2; ++b) {
        const double v = y[b];
        DecomposedSums loo = full;
        loo.n2 = n2 - 1;
        loo.s_yy -= v * (yi.sum_below(v) + yi.sum_above(v));
        loo.s_b -= v * xi.sum_below(v);
        loo.s_c -= v * xi.sum_above(v);
        loo.s_d -= xi.sum_squares_above(v);
        loo.s_e -= v * v * static_cast<double>(xi.count_below(v));
        out.nu[n1 + b] = nn * delta - (nn - 1.0) * loo_delta(loo);
    }
    return out;
}

} // namespace svt
