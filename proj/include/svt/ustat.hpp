#pragma once

#include <cstddef>
#include <vector>

#include "svt/sample.hpp"

namespace svt {

// Arguments of the degree-(2,2) kernel.
struct KernelArgs {
    double x1 = 0.0;
    double x2 = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
};

// The twelve-term kernel whose expectation is the semivariance departure
// measure. All indicators are strict.
double kernel_h(const KernelArgs& a);

// The six aggregate sums the estimator decomposes into, each one expectation
// term of the departure measure:
//   s_yy = sum_{k != l} Y_k Y_l [Y_k > Y_l]
//   s_xx = sum_{i != j} X_i X_j [X_i > X_j]
//   s_b  = sum_{i,k} X_i Y_k [Y_k > X_i]
//   s_c  = sum_{i,k} X_i Y_k [X_i > Y_k]
//   s_d  = sum_{i,k} X_i^2  [X_i > Y_k]
//   s_e  = sum_{i,k} Y_k^2  [Y_k > X_i]
struct DecomposedSums {
    double s_yy = 0.0;
    double s_xx = 0.0;
    double s_b = 0.0;
    double s_c = 0.0;
    double s_d = 0.0;
    double s_e = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

// Assembles the estimate from the six sums:
//   2*s_yy/(n2(n2-1)) - 2*s_xx/(n1(n1-1)) + (2/(n1*n2))*(s_b - s_c + s_d - s_e)
double delta_from_sums(const DecomposedSums& sums);

struct DeltaEstimate {
    double value = 0.0;
    DecomposedSums sums;
    // All values across both samples are identical; every strict indicator
    // vanishes and downstream tests must report degeneracy, not divide by zero.
    bool degenerate = false;
};

// Brute-force reference: averages the kernel over all i<j, k<l quadruples,
// symmetrized over the two X-Y pairings. O(n1^2 n2^2); test oracle and small
// inputs only. Throws InsufficientSampleError when either size < 2.
DeltaEstimate delta_naive(const Sample& x, const Sample& y);

// Production path: the same estimate through sorting and prefix sums in
// O((n1+n2) log(n1+n2)).
DeltaEstimate delta_fast(const Sample& x, const Sample& y);

// Jackknife pseudo-values over the pooled sample (x entries first):
//   nu_i = n * delta - (n-1) * delta_without_observation_i.
// Their mean equals the full-sample estimate exactly.
struct PseudoValues {
    std::vector<double> nu;
    double full_delta = 0.0;
    bool degenerate = false;
};

// Leave-one-out estimates are updated incrementally from the decomposed sums,
// total cost O(n log n). Throws InsufficientSampleError when either size < 3.
PseudoValues jackknife_pseudovalues(const Sample& x, const Sample& y);

} // namespace svt
