#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svt/asymptotic_normal.hpp"
#include "svt/jel.hpp"
#include "svt/sample.hpp"
#include "svt/semivariance.hpp"

namespace svt {

// Summary row in the shape of the data-analysis table: n, mean, SD, range,
// skewness, kurtosis. SD uses the n-1 denominator; the standardized moments
// use the population denominator n; kurtosis is non-excess.
struct DescriptiveStats {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
    double range = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

DescriptiveStats describe(const Sample& s);

enum class MethodChoice { jel, normal, both };

// Everything one `test` invocation reports.
struct TestReport {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double delta = 0.0;
    double alpha = 0.0;
    std::optional<JelSolution> jel;
    std::optional<NormalTestResult> normal;
    std::string verdict; // "reject" | "fail to reject" | "reject (boundary)"
    bool reject = false;
    std::vector<std::string> warnings;
};

// Runs the requested method(s); the JEL result drives the verdict whenever it
// is present (it is the primary test).
TestReport run_test_report(const Sample& x, const Sample& y, double alpha,
                           MethodChoice method);

// Text renderers use 6 significant digits; JSON renderers emit full-precision
// numbers that parse back exactly.
std::string render_test_text(const TestReport& report);
std::string render_test_json(const TestReport& report);
std::string render_describe_text(const DescriptiveStats& stats, const std::string& label);
std::string render_describe_json(const DescriptiveStats& stats, const std::string& label);
std::string render_semivar_text(const SemivarianceEstimate& estimate, const std::string& label);

} // namespace svt
