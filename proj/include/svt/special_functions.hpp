#pragma once

namespace svt {

// Standard normal CDF and survival function, computed through erfc so the
// tails stay accurate far beyond the double-precision range of 1 - Phi(x).
double normal_cdf(double x);
double normal_sf(double x);

// Inverse standard normal CDF. Rational initial guess refined by one Halley
// step against the erfc-based CDF; absolute error below 1e-9 on (0, 1).
// Throws OutOfRangeError unless 0 < p < 1.
double normal_quantile(double p);

// Survival function of the chi-squared distribution with one degree of
// freedom: P(X > s) = erfc(sqrt(s/2)). Throws NegativeStatisticError for
// s < 0.
double chi2_1_sf(double s);

// Quantile of chi-squared with one df: the s with P(X <= s) = p, found by
// bisection on chi2_1_sf to 1e-12 on the probability scale.
// Throws OutOfRangeError unless 0 < p < 1.
double chi2_1_quantile(double p);

} // namespace svt
