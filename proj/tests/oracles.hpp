// Independent reference implementations used only by the test suites.
// Everything here is written directly from the defining formulas, without
// touching the library's computation paths, so a test failure points at the
// implementation rather than at a shared helper.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

inline double ind(bool cond) { return cond ? 1.0 : 0.0; }

// Literal transcription of the printed twelve-term kernel.
inline double kernel(double x1, double x2, double y1, double y2) {
    return y1 * y2 * ind(y1 > y2) + y1 * y2 * ind(y2 > y1) - x1 * x2 * ind(x1 > x2) -
           x1 * x2 * ind(x2 > x1) + x1 * y1 * ind(y1 > x1) + x2 * y2 * ind(y2 > x2) -
           x1 * y1 * ind(x1 > y1) - x2 * y2 * ind(x2 > y2) + x1 * x1 * ind(x1 > y1) +
           x2 * x2 * ind(x2 > y2) - y1 * y1 * ind(y1 > x1) - y2 * y2 * ind(y2 > x2);
}

// Symmetrized quadruple-loop estimate; O(n1^2 n2^2).
inline double delta_brute(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n1 = x.size();
    const std::size_t n2 = y.size();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        for (std::size_t j = i + 1; j < n1; ++j) {
            for (std::size_t k = 0; k + 1 < n2; ++k) {
                for (std::size_t l = k + 1; l < n2; ++l) {
                    total += 0.5 * (kernel(x[i], x[j], y[k], y[l]) +
                                    kernel(x[i], x[j], y[l], y[k]));
                }
            }
        }
    }
    const double pairs = 0.25 * static_cast<double>(n1) * static_cast<double>(n1 - 1) *
                         static_cast<double>(n2) * static_cast<double>(n2 - 1);
    return total / pairs;
}

// Delete-and-recompute pseudo-values driven entirely by delta_brute.
inline std::vector<double> pseudovalues_brute(const std::vector<double>& x,
                                              const std::vector<double>& y) {
    const double full = delta_brute(x, y);
    const double n = static_cast<double>(x.size() + y.size());
    std::vector<double> nu;
    nu.reserve(x.size() + y.size());
    for (std::size_t a = 0; a < x.size(); ++a) {
        std::vector<double> reduced = x;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(a));
        nu.push_back(n * full - (n - 1.0) * delta_brute(reduced, y));
    }
    for (std::size_t b = 0; b < y.size(); ++b) {
        std::vector<double> reduced = y;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(b));
        nu.push_back(n * full - (n - 1.0) * delta_brute(x, reduced));
    }
    return nu;
}

// Standard normal density.
inline double normal_pdf(double t) {
    return std::exp(-0.5 * t * t) / 2.5066282746310005024;
}

// Composite Simpson quadrature of the standard normal upper tail; the
// remainder past the integration window is far below the tolerances used.
inline double normal_sf_quadrature(double x) {
    const double hi = x + 60.0;
    const std::size_t steps = 400000; // even
    const double h = (hi - x) / static_cast<double>(steps);
    double acc = normal_pdf(x) + normal_pdf(hi);
    for (std::size_t i = 1; i < steps; ++i) {
        acc += normal_pdf(x + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// chi-squared(1) survival by quadrature: P(X > s) = 2 P(Z > sqrt(s)).
inline double chi2_1_sf_quadrature(double s) {
    if (s == 0.0) return 1.0;
    return 2.0 * normal_sf_quadrature(std::sqrt(s));
}

// Inverse standard normal CDF by bisection on the erfc-based CDF.
inline double normal_quantile_bisect(double p) {
    double lo = -40.0, hi = 40.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double cdf = 0.5 * std::erfc(-mid / 1.4142135623730950488);
        if (cdf < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Analytic CDFs of the simulation families, for sampler validation.
inline double exponential_cdf(double rate, double x) {
    return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x);
}
inline double pareto_cdf(double shape, double x) {
    return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -shape);
}
inline double lognormal_cdf(double mu, double sigma, double x) {
    if (x <= 0.0) return 0.0;
    return 0.5 * std::erfc(-(std::log(x) - mu) / (sigma * 1.4142135623730950488));
}

// Departure measure for two exponential populations with rates a and b,
// from the closed-form semivariance 2 exp(-rate t) / rate^2 integrated
// against both densities.
inline double delta_exp_exp_closed_form(double a, double b) {
    return 1.0 / (a * a) + 2.0 * b / (a * a * (a + b)) - 2.0 * a / (b * b * (a + b)) -
           1.0 / (b * b);
}

// Same quantity by Simpson quadrature of the defining integral.
inline double delta_exp_exp_quadrature(double a, double b) {
    auto semivariance_x = [a](double t) { return 2.0 * std::exp(-a * t) / (a * a); };
    auto semivariance_y = [b](double t) { return 2.0 * std::exp(-b * t) / (b * b); };
    auto integrand = [&](double t) {
        const double density_sum = a * std::exp(-a * t) + b * std::exp(-b * t);
        return (semivariance_x(t) - semivariance_y(t)) * density_sum;
    };
    const double hi = 80.0 / std::min(a, b);
    const std::size_t steps = 200000;
    const double h = hi / static_cast<double>(steps);
    double acc = integrand(0.0) + integrand(hi);
    for (std::size_t i = 1; i < steps; ++i) {
        acc += integrand(h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// Relative closeness with a magnitude floor: values whose true scale is the
// square of the data range compare in pure relative terms, while a pair of
// incidental near-zeros does not blow the ratio up.
inline bool close_rel(double a, double b, double tol, double scale_floor) {
    const double denom = std::max({std::abs(a), std::abs(b), scale_floor});
    if (denom == 0.0) return a == b;
    return std::abs(a - b) <= tol * denom;
}

// Random test instances: mixed continuous and tied small-integer data.
inline std::vector<double> random_instance(std::mt19937& gen, std::size_t n, bool tied) {
    std::vector<double> out(n);
    if (tied) {
        std::uniform_int_distribution<int> dist(0, 6);
        for (double& v : out) v = static_cast<double>(dist(gen));
    } else {
        std::uniform_real_distribution<double> dist(0.0, 10.0);
        for (double& v : out) v = dist(gen);
    }
    return out;
}

} // namespace oracle
