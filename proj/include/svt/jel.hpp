#pragma once

#include <vector>

#include "svt/sample.hpp"
#include "svt/ustat.hpp"

namespace svt {

enum class JelStatus {
    ok,
    // Zero fell outside the open hull of the pseudo-values. The likelihood
    // ratio has no interior maximum; reported as a boundary rejection with an
    // infinite statistic, never as a silent number.
    hull_violation,
};

struct JelSolution {
    JelStatus status = JelStatus::ok;
    double lambda = 0.0;
    std::vector<double> weights;
    double statistic = 0.0; // -2 log R, +infinity on hull violation
    double p_value = 0.0;
    bool reject = false;
    double alpha = 0.0;
};

// Root of g(lambda) = (1/n) sum nu_i / (1 + lambda nu_i) inside the feasible
// interval (-1/max(nu), -1/min(nu)). g is strictly decreasing there, so a
// safeguarded Newton iteration with a bisection fallback always converges.
// Throws HullViolationError unless min(nu) < 0 < max(nu).
double solve_lambda(const PseudoValues& nu);

// Statistic -2 log R = 2 sum log(1 + lambda nu_i) and the maximizing weights
// p_i = (1/n) / (1 + lambda nu_i). Decision fields are left unset (NaN alpha).
JelSolution jel_statistic(const PseudoValues& nu);

// Full test: pseudo-values -> lambda -> statistic -> chi-squared(1) p-value.
// Rejects when the statistic exceeds the chi-squared quantile at 1 - alpha
// (equivalently when p_value < alpha). Hull violations surface as
// JelStatus::hull_violation with reject = true. Throws
// InsufficientSampleError (either size < 3) and DegenerateDataError (all
// pooled values identical).
//
// Finite-sample caveat: the pseudo-values inherit the kernel's squared
// terms, so under heavy-tailed data the chi-squared calibration is reached
// slowly and the test over-rejects at moderate n (see the README's measured
// sizes). The simulation harness exists to quantify this for a given setup.
JelSolution jel_test(const Sample& x, const Sample& y, double alpha = 0.05);

// Variant for callers that already hold the pseudo-values (the simulation
// harness computes them once per replication).
JelSolution jel_test_from_pseudovalues(const PseudoValues& nu, double alpha);

} // namespace svt
