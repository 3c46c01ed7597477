#pragma once

#include "svt/sample.hpp"

namespace svt {

struct NormalTestResult {
    double delta = 0.0;   // departure estimate
    double s2 = 0.0;      // plug-in estimate of the null variance
    double z = 0.0;       // sqrt(n) * delta / sqrt(s2)
    double p_value = 0.0; // two-sided
    bool reject = false;
    double p_hat = 0.0;   // n1 / n
    double alpha = 0.0;
};

// Plug-in integrand of the null-variance formula, evaluated under the pooled
// empirical CDF with strict indicators:
//   psi(x) = x^2 * #{z < x}/n - (2x/n) * sum{z : z < x} - (1/n) * sum{z^2 : z > x}
double psi_plugin(const PooledSample& pooled, double x);
double psi_plugin(const SortedIndex& pooled_index, double x);

// z-test against the standard normal: S^2 = (4 / (p(1-p))) * sample variance
// of psi over the pooled values, reject when |z| exceeds the two-sided
// critical value. Throws DegenerateVarianceError when every psi value is
// equal and InsufficientSampleError when either size < 2. The null-variance
// plug-in is known to be unreliable in finite samples; the JEL test is the
// primary method.
NormalTestResult normal_test(const Sample& x, const Sample& y, double alpha = 0.05);

} // namespace svt
