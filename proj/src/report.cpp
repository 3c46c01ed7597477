#include "svt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "svt/accumulate.hpp"
#include "svt/errors.hpp"

namespace svt {
namespace {

std::string fmt6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

// p-values can underflow the double range (huge statistics); text mode says so
// instead of printing a bare 0.
std::string fmt_p(double p) {
    if (p < 2.2250738585072014e-308) return "p < 2.2e-308";
    return "p = " + fmt6(p);
}

nlohmann::json jel_to_json(const JelSolution& sol) {
    nlohmann::json j;
    j["status"] = sol.status == JelStatus::ok ? "ok" : "hull_violation";
    if (sol.status == JelStatus::ok) {
        j["lambda"] = sol.lambda;
        j["statistic"] = sol.statistic;
    } else {
        j["lambda"] = nullptr;
        j["statistic"] = "inf";
    }
    j["p_value"] = sol.p_value;
    j["reject"] = sol.reject;
    return j;
}

nlohmann::json normal_to_json(const NormalTestResult& r) {
    nlohmann::json j;
    j["delta"] = r.delta;
    j["s2"] = r.s2;
    j["z"] = r.z;
    j["p_value"] = r.p_value;
    j["reject"] = r.reject;
    j["p_hat"] = r.p_hat;
    return j;
}

} // namespace

DescriptiveStats describe(const Sample& s) {
    const std::size_t n = s.size();
    const auto& values = s.values();

    detail::NeumaierSum mean_acc;
    for (double v : values) mean_acc.add(v);
    const double mean = mean_acc.value() / static_cast<double>(n);

    detail::NeumaierSum m2_acc, m3_acc, m4_acc;
    for (double v : values) {
        const double d = v - mean;
        m2_acc.add(d * d);
        m3_acc.add(d * d * d);
        m4_acc.add(d * d * d * d);
    }
    const double m2 = m2_acc.value() / static_cast<double>(n);
    const double m3 = m3_acc.value() / static_cast<double>(n);
    const double m4 = m4_acc.value() / static_cast<double>(n);

    DescriptiveStats stats;
    stats.n = n;
    stats.mean = mean;
    stats.sd = n > 1 ? std::sqrt(m2_acc.value() / static_cast<double>(n - 1)) : 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    stats.range = *hi - *lo;
    stats.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    stats.kurtosis = m2 > 0.0 ? m4 / (m2 * m2) : 0.0;
    return stats;
}

TestReport run_test_report(const Sample& x, const Sample& y, double alpha,
                           MethodChoice method) {
    TestReport report;
    report.n1 = x.size();
    report.n2 = y.size();
    report.alpha = alpha;

    const DeltaEstimate delta = delta_fast(x, y);
    report.delta = delta.value;

    if (method == MethodChoice::jel || method == MethodChoice::both) {
        report.jel = jel_test(x, y, alpha);
        if (report.jel->status == JelStatus::hull_violation) {
            report.warnings.push_back(
                "pseudo-value hull violation: zero lies outside the pseudo-value range; "
                "the chi-squared calibration does not apply, reporting a boundary rejection");
        }
    }
    if (method == MethodChoice::normal || method == MethodChoice::both) {
        report.normal = normal_test(x, y, alpha);
        report.warnings.push_back(
            "the normal test relies on a plug-in null-variance estimate that can be "
            "unreliable in finite samples; prefer the jel method");
    }

    if (report.jel.has_value()) {
        report.reject = report.jel->reject;
        report.verdict = report.jel->status == JelStatus::hull_violation
                             ? "reject (boundary)"
                             : (report.jel->reject ? "reject" : "fail to reject");
    } else {
        report.reject = report.normal->reject;
        report.verdict = report.normal->reject ? "reject" : "fail to reject";
    }
    return report;
}

std::string render_test_text(const TestReport& report) {
    std::ostringstream out;
    out << "n1 = " << report.n1 << ", n2 = " << report.n2 << "\n";
    out << "delta = " << fmt6(report.delta) << "\n";
    if (report.jel.has_value()) {
        const JelSolution& jel = *report.jel;
        if (jel.status == JelStatus::hull_violation) {
            out << "jel: statistic = inf (hull violation), " << fmt_p(jel.p_value) << "\n";
        } else {
            out << "jel: lambda = " << fmt6(jel.lambda) << ", -2 log R = "
                << fmt6(jel.statistic) << ", " << fmt_p(jel.p_value) << "\n";
        }
    }
    if (report.normal.has_value()) {
        const NormalTestResult& nr = *report.normal;
        out << "normal: z = " << fmt6(nr.z) << ", S2 = " << fmt6(nr.s2) << ", "
            << fmt_p(nr.p_value) << "\n";
    }
    out << "alpha = " << fmt6(report.alpha) << "\n";
    out << "verdict: " << report.verdict << "\n";
    for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
    return out.str();
}

std::string render_test_json(const TestReport& report) {
    nlohmann::json j;
    j["n1"] = report.n1;
    j["n2"] = report.n2;
    j["delta"] = report.delta;
    j["alpha"] = report.alpha;
    if (report.jel.has_value()) j["jel"] = jel_to_json(*report.jel);
    if (report.normal.has_value()) j["normal"] = normal_to_json(*report.normal);
    j["verdict"] = report.verdict;
    j["reject"] = report.reject;
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string render_describe_text(const DescriptiveStats& stats, const std::string& label) {
    std::ostringstream out;
    if (!label.empty()) out << label << "\n";
    out << "n         " << stats.n << "\n";
    out << "mean      " << fmt6(stats.mean) << "\n";
    out << "sd        " << fmt6(stats.sd) << "\n";
    out << "range     " << fmt6(stats.range) << "\n";
    out << "skewness  " << fmt6(stats.skewness) << "\n";
    out << "kurtosis  " << fmt6(stats.kurtosis) << "\n";
    return out.str();
}

std::string render_describe_json(const DescriptiveStats& stats, const std::string& label) {
    nlohmann::json j;
    j["label"] = label;
    j["n"] = stats.n;
    j["mean"] = stats.mean;
    j["sd"] = stats.sd;
    j["range"] = stats.range;
    j["skewness"] = stats.skewness;
    j["kurtosis"] = stats.kurtosis;
    j["conventions"] = {{"sd_denominator", "n-1"},
                        {"moment_denominator", "n"},
                        {"kurtosis", "non-excess"}};
    return j.dump(2) + "\n";
}

std::string render_semivar_text(const SemivarianceEstimate& estimate, const std::string& label) {
    std::ostringstream out;
    if (!label.empty()) out << label << ": ";
    out << "stop-loss moment(target = " << fmt6(estimate.target) << ", power = "
        << fmt6(estimate.power) << ") = " << fmt6(estimate.value) << "\n";
    return out.str();
}

} // namespace svt
