#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "svt/rng.hpp"
#include "svt/sample.hpp"

namespace svt {

enum class Family { exponential, pareto, lognormal };

// Sampling distribution for one side of a simulation scenario.
//   exponential: params = {rate}, rate > 0
//   pareto:      params = {shape}, shape > 0, scale fixed at 1 (support [1, inf))
//   lognormal:   params = {mu, sigma}, sigma > 0
struct DistributionSpec {
    Family family = Family::exponential;
    std::vector<double> params;

    static DistributionSpec exponential(double rate);
    static DistributionSpec pareto(double shape);
    static DistributionSpec lognormal(double mu, double sigma);

    void validate() const; // throws InvalidParametersError
    double quantile(double u) const; // inverse CDF, u in (0, 1)
    std::string describe() const;

    bool operator==(const DistributionSpec&) const = default;
};

// Inverse-CDF sampling of n observations from the stream.
Sample sample_from(const DistributionSpec& spec, std::size_t n, RngStream& stream);

enum class TestMethod { jel, normal };

struct SimulationConfig {
    DistributionSpec dist_x;
    DistributionSpec dist_y;
    std::vector<std::size_t> sizes; // per-sample sizes, n1 = n2 = n
    std::size_t replications = 10000;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    TestMethod method = TestMethod::jel;

    void validate() const;
};

struct SizeResult {
    std::size_t n = 0;
    double rejection_rate = 0.0;
    double std_error = 0.0; // binomial: sqrt(r(1-r)/replications)
    std::size_t hull_violations = 0;
    std::size_t degenerate = 0;
    double seconds = 0.0; // wall clock for this grid row
};

struct SimulationReport {
    SimulationConfig config;
    std::vector<SizeResult> rows;
};

// Type-I error study: both samples drawn from the common spec. Requires
// dist_x == dist_y. Hull violations count as (boundary) rejections and are
// tallied separately. `workers` = 0 picks the hardware concurrency; the
// result is identical for any worker count.
SimulationReport run_type1(const SimulationConfig& config, unsigned workers = 0);

// Power study under dist_x != dist_y; otherwise identical mechanics.
SimulationReport run_power(const SimulationConfig& config, unsigned workers = 0);

// Scenario grid config: flat key=value lines (family.x, params.x, family.y,
// params.y, sizes, reps, alpha, seed, method). '#' comments and blank lines
// are ignored. Throws ParseError / InvalidParametersError naming the key.
SimulationConfig parse_simulation_config(std::istream& in);
SimulationConfig load_simulation_config(const std::string& path);

// Renders the resolved config as the key=value lines parse accepts.
std::string config_to_string(const SimulationConfig& config);

// CSV report (columns n, rate, stderr, hull_violations, seconds) preceded by
// '#' header lines echoing the resolved config. Everything except the
// seconds column is deterministic for a fixed (config, seed).
std::string report_csv(const SimulationReport& report);

// Aligned text table, one row per sample size.
std::string report_table(const SimulationReport& report);

} // namespace svt
