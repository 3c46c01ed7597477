#include "svt/jel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"
#include "svt/special_functions.hpp"

namespace svt {
namespace {

double constraint_g(const std::vector<double>& nu, double lambda) {
    detail::NeumaierSum acc;
    for (double v : nu) acc.add(v / (1.0 + lambda * v));
    return acc.value() / static_cast<double>(nu.size());
}

double constraint_slope(const std::vector<double>& nu, double lambda) {
    detail::NeumaierSum acc;
    for (double v : nu) {
        const double t = 1.0 + lambda * v;
        acc.add(v * v / (t * t));
    }
    return -acc.value() / static_cast<double>(nu.size());
}

double stddev(const std::vector<double>& nu) {
    detail::NeumaierSum mean_acc;
    for (double v : nu) mean_acc.add(v);
    const double mean = mean_acc.value() / static_cast<double>(nu.size());
    detail::NeumaierSum var_acc;
    for (double v : nu) var_acc.add((v - mean) * (v - mean));
    return std::sqrt(var_acc.value() / static_cast<double>(nu.size()));
}

} // namespace

double solve_lambda(const PseudoValues& pv) {
    const std::vector<double>& nu = pv.nu;
    const double nu_min = *std::min_element(nu.begin(), nu.end());
    const double nu_max = *std::max_element(nu.begin(), nu.end());
    if (!(nu_min < 0.0 && nu_max > 0.0)) throw HullViolationError();

    // Feasible open interval, shrunk by a relative margin so every iterate
    // keeps 1 + lambda nu_i strictly positive.
    constexpr double margin = 1e-12;
    const double lo_bound = (-1.0 / nu_max) * (1.0 - margin);
    const double hi_bound = (-1.0 / nu_min) * (1.0 - margin);

    const double tol = 1e-10 * std::max(1.0, stddev(nu));

    double lo = lo_bound;
    double hi = hi_bound;
    double lambda = 0.0; // always feasible, g(0) = mean(nu)
    double g = constraint_g(nu, lambda);
    if (std::abs(g) <= tol) return lambda;

    // g is strictly decreasing: a positive value pushes the root right.
    if (g > 0.0) {
        lo = lambda;
    } else {
        hi = lambda;
    }

    for (int iter = 0; iter < 200; ++iter) {
        const double slope = constraint_slope(nu, lambda);
        double next = lambda - g / slope;
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
            next = 0.5 * (lo + hi); // bisection fallback
        }
        lambda = next;
        g = constraint_g(nu, lambda);
        if (std::abs(g) <= tol) return lambda;
        if (g > 0.0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        if (hi - lo <= margin * std::max(1.0, std::abs(lambda))) break;
    }
    return lambda;
}

JelSolution jel_statistic(const PseudoValues& pv) {
    const double lambda = solve_lambda(pv); // propagates HullViolationError
    const std::size_t n = pv.nu.size();

    JelSolution sol;
    sol.status = JelStatus::ok;
    sol.lambda = lambda;
    sol.weights.resize(n);
    detail::NeumaierSum log_acc;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 1.0 + lambda * pv.nu[i];
        sol.weights[i] = 1.0 / (static_cast<double>(n) * t);
        log_acc.add(std::log(t));
    }
    sol.statistic = std::max(0.0, 2.0 * log_acc.value());
    sol.p_value = std::numeric_limits<double>::quiet_NaN();
    sol.alpha = std::numeric_limits<double>::quiet_NaN();
    return sol;
}

JelSolution jel_test_from_pseudovalues(const PseudoValues& pv, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw OutOfRangeError("significance level must lie in (0, 1)");
    }
    if (pv.degenerate) {
        throw DegenerateDataError("all pooled values are identical, the JEL test is undefined");
    }

    JelSolution sol;
    try {
        sol = jel_statistic(pv);
    } catch (const HullViolationError&) {
        sol.status = JelStatus::hull_violation;
        sol.lambda = std::numeric_limits<double>::quiet_NaN();
        sol.weights.clear();
        sol.statistic = std::numeric_limits<double>::infinity();
        sol.p_value = 0.0;
        sol.reject = true;
        sol.alpha = alpha;
        return sol;
    }

    sol.alpha = alpha;
    sol.p_value = chi2_1_sf(sol.statistic);
    const double critical = chi2_1_quantile(1.0 - alpha);
    sol.reject = sol.statistic > critical;
    return sol;
}

JelSolution jel_test(const Sample& x, const Sample& y, double alpha) {
    return jel_test_from_pseudovalues(jackknife_pseudovalues(x, y), alpha);
}

} // namespace svt
