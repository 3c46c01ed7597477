// svtest: two-sample tests for equality of upper semivariance.
//
// Subcommands: test (JEL ratio test and the asymptotic normal test),
// describe (summary statistics), semivar (stop-loss moment queries), and
// simulate (Monte Carlo type-I-error / power studies).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "svt/csv.hpp"
#include "svt/errors.hpp"
#include "svt/montecarlo.hpp"
#include "svt/report.hpp"
#include "svt/semivariance.hpp"

namespace {

constexpr int kExitFailToReject = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

int cmd_test(const std::string& x_path, const std::string& y_path, double alpha,
             const std::string& method, const std::string& format, bool allow_negative) {
    svt::MethodChoice choice = svt::MethodChoice::jel;
    if (method == "normal") {
        choice = svt::MethodChoice::normal;
    } else if (method == "both") {
        choice = svt::MethodChoice::both;
    } else if (method != "jel") {
        throw svt::Error("unknown method '" + method + "' (expected jel, normal or both)");
    }

    const svt::Sample x = svt::load_sample_file(x_path, allow_negative);
    const svt::Sample y = svt::load_sample_file(y_path, allow_negative);

    svt::TestReport report = svt::run_test_report(x, y, alpha, choice);
    if (allow_negative) {
        report.warnings.push_back("negative-value override active; the underlying theory "
                                  "assumes non-negative data");
    }

    std::cout << (format == "json" ? svt::render_test_json(report)
                                   : svt::render_test_text(report));
    return report.reject ? kExitReject : kExitFailToReject;
}

int cmd_describe(const std::string& path, const std::string& format) {
    const svt::Sample s = svt::load_sample_file(path);
    const svt::DescriptiveStats stats = svt::describe(s);
    std::cout << (format == "json" ? svt::render_describe_json(stats, s.label())
                                   : svt::render_describe_text(stats, s.label()));
    return 0;
}

int cmd_semivar(const std::string& path, double target, double power) {
    const svt::Sample s = svt::load_sample_file(path);
    const svt::SemivarianceEstimate estimate = svt::stop_loss_moment(s, target, power);
    std::cout << svt::render_semivar_text(estimate, s.label());
    return 0;
}

int cmd_simulate(const std::string& config_path, std::uint64_t* seed_override,
                 std::uint64_t* reps_override, const std::string& out_path) {
    svt::SimulationConfig config = svt::load_simulation_config(config_path);
    if (seed_override) config.seed = *seed_override;
    if (reps_override) config.replications = *reps_override;
    config.validate();

    const svt::SimulationReport report = config.dist_x == config.dist_y
                                             ? svt::run_type1(config)
                                             : svt::run_power(config);

    std::cout << svt::report_table(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw svt::Error("cannot write report file: " + out_path);
        out << svt::report_csv(report);
        std::cout << "report written to " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sample tests for equality of upper semivariance"};
    app.require_subcommand(1);

    std::string x_path, y_path, input_path, config_path, out_path;
    std::string method = "jel";
    std::string format = "text";
    double alpha = 0.05;
    double target = 0.0;
    double power = 2.0;
    bool allow_negative = false;
    std::uint64_t seed_override = 0, reps_override = 0;

    CLI::App* test = app.add_subcommand("test", "JEL ratio test for equal upper semivariance");
    test->add_option("--x", x_path, "first sample file, one value per line")->required();
    test->add_option("--y", y_path, "second sample file")->required();
    test->add_option("--alpha", alpha, "significance level")->default_val(0.05);
    test->add_option("--method", method, "jel, normal or both")->default_val("jel");
    test->add_option("--format", format, "text or json")->default_val("text");
    test->add_flag("--allow-negative", allow_negative, "accept negative observations");

    CLI::App* describe = app.add_subcommand("describe", "summary statistics of one sample");
    describe->add_option("--input", input_path, "sample file")->required();
    describe->add_option("--format", format, "text or json")->default_val("text");

    CLI::App* semivar = app.add_subcommand("semivar", "empirical stop-loss moment");
    semivar->add_option("--input", input_path, "sample file")->required();
    semivar->add_option("--target", target, "target value")->required();
    semivar->add_option("--power", power, "moment power")->default_val(2.0);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo rejection-rate study");
    simulate->add_option("--config", config_path, "key=value scenario file")->required();
    CLI::Option* seed_opt = simulate->add_option("--seed", seed_override, "override config seed");
    CLI::Option* reps_opt =
        simulate->add_option("--reps", reps_override, "override config replications");
    simulate->add_option("--out", out_path, "write the CSV report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (test->parsed()) {
            return cmd_test(x_path, y_path, alpha, method, format, allow_negative);
        }
        if (describe->parsed()) {
            return cmd_describe(input_path, format);
        }
        if (semivar->parsed()) {
            return cmd_semivar(input_path, target, power);
        }
        if (simulate->parsed()) {
            return cmd_simulate(config_path, seed_opt->count() ? &seed_override : nullptr,
                                reps_opt->count() ? &reps_override : nullptr, out_path);
        }
    } catch (const svt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
