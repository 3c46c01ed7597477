#include "svt/special_functions.hpp"

#include <cmath>

#include "svt/errors.hpp"

namespace svt {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2Pi = 2.5066282746310005024;

// Rational approximation of the inverse normal CDF (Acklam's coefficients),
// good to ~1e-9 on its own before refinement.
double normal_quantile_approx(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    constexpr double p_high = 1.0 - p_low;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= p_high) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

} // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw OutOfRangeError("normal_quantile requires 0 < p < 1");
    }
    double x = normal_quantile_approx(p);
    // One Halley step against the erfc-based CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double chi2_1_sf(double s) {
    if (s < 0.0) throw NegativeStatisticError("chi2_1_sf requires s >= 0");
    return std::erfc(std::sqrt(0.5 * s));
}

double chi2_1_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw OutOfRangeError("chi2_1_quantile requires 0 < p < 1");
    }
    const double target_sf = 1.0 - p;
    double lo = 0.0;
    double hi = 1.0;
    while (chi2_1_sf(hi) > target_sf) hi *= 2.0;
    // chi2_1_sf is strictly decreasing; bisect until the bracket collapses.
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double sf = chi2_1_sf(mid);
        if (std::abs(sf - target_sf) <= 1e-12 && (hi - lo) <= 1e-12 * (1.0 + mid)) {
            return mid;
        }
        if (sf > target_sf) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace svt
