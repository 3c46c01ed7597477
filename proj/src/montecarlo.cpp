#include "svt/montecarlo.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "svt/asymptotic_normal.hpp"
#include "svt/errors.hpp"
#include "svt/jel.hpp"
#include "svt/special_functions.hpp"
#include "svt/ustat.hpp"

namespace svt {
namespace {

std::string family_name(Family family) {
    switch (family) {
        case Family::exponential: return "exponential";
        case Family::pareto: return "pareto";
        case Family::lognormal: return "lognormal";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "exponential") return Family::exponential;
    if (name == "pareto") return Family::pareto;
    if (name == "lognormal") return Family::lognormal;
    throw InvalidParametersError("unknown distribution family: " + name);
}

std::string format_params(const std::vector<double>& params) {
    std::ostringstream out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out << ",";
        out << params[i];
    }
    return out.str();
}

// Per-replication outcome, collected by replication index so the reduction
// is independent of scheduling.
enum class Outcome : unsigned char { fail_to_reject, reject, boundary_reject, degenerate };

Outcome run_one(const SimulationConfig& config, std::size_t size, std::size_t rep,
                double critical) {
    RngStream stream = replication_stream(config.seed, size, rep);
    const Sample x = sample_from(config.dist_x, size, stream);
    const Sample y = sample_from(config.dist_y, size, stream);

    if (config.method == TestMethod::normal) {
        try {
            const NormalTestResult r = normal_test(x, y, config.alpha);
            return r.reject ? Outcome::reject : Outcome::fail_to_reject;
        } catch (const DegenerateVarianceError&) {
            return Outcome::degenerate;
        }
    }

    const PseudoValues pv = jackknife_pseudovalues(x, y);
    if (pv.degenerate) return Outcome::degenerate;
    JelSolution sol;
    try {
        sol = jel_statistic(pv);
    } catch (const HullViolationError&) {
        return Outcome::boundary_reject;
    }
    return sol.statistic > critical ? Outcome::reject : Outcome::fail_to_reject;
}

SizeResult run_size(const SimulationConfig& config, std::size_t size, unsigned workers) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t reps = config.replications;
    std::vector<Outcome> outcomes(reps);

    // The chi-squared critical value is shared by every replication.
    const double critical = chi2_1_quantile(1.0 - config.alpha);

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, reps));

    auto worker_body = [&](std::size_t begin, std::size_t end) {
        for (std::size_t rep = begin; rep < end; ++rep) {
            outcomes[rep] = run_one(config, size, rep, critical);
        }
    };

    if (workers <= 1) {
        worker_body(0, reps);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (reps + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            const std::size_t end = std::min(reps, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker_body, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    SizeResult row;
    row.n = size;
    std::size_t rejections = 0;
    for (Outcome o : outcomes) {
        switch (o) {
            case Outcome::reject: ++rejections; break;
            case Outcome::boundary_reject:
                ++rejections;
                ++row.hull_violations;
                break;
            case Outcome::degenerate: ++row.degenerate; break;
            case Outcome::fail_to_reject: break;
        }
    }
    row.rejection_rate = static_cast<double>(rejections) / static_cast<double>(reps);
    row.std_error = std::sqrt(row.rejection_rate * (1.0 - row.rejection_rate) /
                              static_cast<double>(reps));
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

SimulationReport run_grid(const SimulationConfig& config, unsigned workers) {
    config.validate();
    SimulationReport report;
    report.config = config;
    report.rows.reserve(config.sizes.size());
    for (std::size_t size : config.sizes) {
        report.rows.push_back(run_size(config, size, workers));
    }
    return report;
}

std::vector<double> parse_param_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(piece, &pos);
            while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) {
                ++pos;
            }
            if (pos != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidParametersError("config key '" + key + "': cannot parse number '" +
                                         piece + "'");
        }
    }
    if (out.empty()) throw InvalidParametersError("config key '" + key + "': no values");
    return out;
}

} // namespace

DistributionSpec DistributionSpec::exponential(double rate) {
    DistributionSpec spec{Family::exponential, {rate}};
    spec.validate();
    return spec;
}

DistributionSpec DistributionSpec::pareto(double shape) {
    DistributionSpec spec{Family::pareto, {shape}};
    spec.validate();
    return spec;
}

DistributionSpec DistributionSpec::lognormal(double mu, double sigma) {
    DistributionSpec spec{Family::lognormal, {mu, sigma}};
    spec.validate();
    return spec;
}

void DistributionSpec::validate() const {
    switch (family) {
        case Family::exponential:
            if (params.size() != 1 || !(params[0] > 0.0)) {
                throw InvalidParametersError("exponential needs one rate parameter > 0");
            }
            return;
        case Family::pareto:
            if (params.size() != 1 || !(params[0] > 0.0)) {
                throw InvalidParametersError("pareto needs one shape parameter > 0");
            }
            return;
        case Family::lognormal:
            if (params.size() != 2 || !std::isfinite(params[0]) || !(params[1] > 0.0)) {
                throw InvalidParametersError("lognormal needs (mu, sigma) with sigma > 0");
            }
            return;
    }
    throw InvalidParametersError("unknown distribution family");
}

double DistributionSpec::quantile(double u) const {
    switch (family) {
        case Family::exponential: return -std::log1p(-u) / params[0];
        case Family::pareto: return std::pow(1.0 - u, -1.0 / params[0]);
        case Family::lognormal: return std::exp(params[0] + params[1] * normal_quantile(u));
    }
    return 0.0;
}

std::string DistributionSpec::describe() const {
    return family_name(family) + "(" + format_params(params) + ")";
}

Sample sample_from(const DistributionSpec& spec, std::size_t n, RngStream& stream) {
    spec.validate();
    if (n == 0) throw InvalidParametersError("sample size must be positive");
    std::vector<double> values(n);
    for (double& v : values) v = spec.quantile(stream.uniform01());
    return Sample(std::move(values), spec.describe());
}

void SimulationConfig::validate() const {
    dist_x.validate();
    dist_y.validate();
    if (sizes.empty()) throw InvalidParametersError("config key 'sizes': no values");
    if (replications < 1) throw InvalidParametersError("config key 'reps': must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidParametersError("config key 'alpha': must lie in (0, 1)");
    }
    const std::size_t min_size = method == TestMethod::jel ? 3 : 2;
    for (std::size_t s : sizes) {
        if (s < min_size) {
            throw InvalidParametersError("config key 'sizes': size " + std::to_string(s) +
                                         " too small for the chosen method");
        }
    }
}

SimulationReport run_type1(const SimulationConfig& config, unsigned workers) {
    if (!(config.dist_x == config.dist_y)) {
        throw InvalidParametersError("type-I study requires dist_x == dist_y");
    }
    return run_grid(config, workers);
}

SimulationReport run_power(const SimulationConfig& config, unsigned workers) {
    return run_grid(config, workers);
}

SimulationConfig parse_simulation_config(std::istream& in) {
    SimulationConfig config;
    std::string fam_x, fam_y, params_x, params_y;
    bool saw_fam_x = false, saw_fam_y = false, saw_params_x = false, saw_params_y = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line_no);

        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));

        if (key == "family.x") {
            fam_x = value;
            saw_fam_x = true;
        } else if (key == "family.y") {
            fam_y = value;
            saw_fam_y = true;
        } else if (key == "params.x") {
            params_x = value;
            saw_params_x = true;
        } else if (key == "params.y") {
            params_y = value;
            saw_params_y = true;
        } else if (key == "sizes") {
            config.sizes.clear();
            for (double v : parse_param_list(value, key)) {
                if (v < 1.0 || v != std::floor(v)) {
                    throw InvalidParametersError("config key 'sizes': bad size");
                }
                config.sizes.push_back(static_cast<std::size_t>(v));
            }
        } else if (key == "reps") {
            config.replications = static_cast<std::size_t>(parse_param_list(value, key)[0]);
        } else if (key == "alpha") {
            config.alpha = parse_param_list(value, key)[0];
        } else if (key == "seed") {
            try {
                config.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw InvalidParametersError("config key 'seed': cannot parse '" + value + "'");
            }
        } else if (key == "method") {
            if (value == "jel") {
                config.method = TestMethod::jel;
            } else if (value == "normal") {
                config.method = TestMethod::normal;
            } else {
                throw InvalidParametersError("config key 'method': expected jel or normal");
            }
        } else {
            throw InvalidParametersError("unknown config key '" + key + "'");
        }
    }

    if (!saw_fam_x || !saw_params_x) {
        throw InvalidParametersError("config keys 'family.x' and 'params.x' are required");
    }
    if (!saw_fam_y || !saw_params_y) {
        throw InvalidParametersError("config keys 'family.y' and 'params.y' are required");
    }
    config.dist_x = DistributionSpec{family_from_name(fam_x), parse_param_list(params_x, "params.x")};
    config.dist_y = DistributionSpec{family_from_name(fam_y), parse_param_list(params_y, "params.y")};
    config.validate();
    return config;
}

SimulationConfig load_simulation_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    return parse_simulation_config(in);
}

std::string config_to_string(const SimulationConfig& config) {
    std::ostringstream out;
    out << "family.x=" << family_name(config.dist_x.family) << "\n";
    out << "params.x=" << format_params(config.dist_x.params) << "\n";
    out << "family.y=" << family_name(config.dist_y.family) << "\n";
    out << "params.y=" << format_params(config.dist_y.params) << "\n";
    out << "sizes=";
    for (std::size_t i = 0; i < config.sizes.size(); ++i) {
        if (i > 0) out << ",";
        out << config.sizes[i];
    }
    out << "\n";
    out << "reps=" << config.replications << "\n";
    out << "alpha=" << config.alpha << "\n";
    out << "seed=" << config.seed << "\n";
    out << "method=" << (config.method == TestMethod::jel ? "jel" : "normal") << "\n";
    return out.str();
}

std::string report_csv(const SimulationReport& report) {
    std::ostringstream out;
    std::istringstream config_lines(config_to_string(report.config));
    std::string line;
    while (std::getline(config_lines, line)) out << "# " << line << "\n";
    out << "n,rate,stderr,hull_violations,seconds\n";
    for (const SizeResult& row : report.rows) {
        std::ostringstream fixed;
        fixed.setf(std::ios::fixed);
        fixed.precision(3);
        fixed << row.seconds;
        out << row.n << "," << row.rejection_rate << "," << row.std_error << ","
            << row.hull_violations << "," << fixed.str() << "\n";
    }
    return out.str();
}

std::string report_table(const SimulationReport& report) {
    std::ostringstream out;
    out << report.config.dist_x.describe() << " vs " << report.config.dist_y.describe()
        << ", reps=" << report.config.replications << ", alpha=" << report.config.alpha
        << ", seed=" << report.config.seed
        << ", method=" << (report.config.method == TestMethod::jel ? "jel" : "normal") << "\n";
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "%6s %8s %8s %6s %6s %9s\n", "n", "rate", "stderr",
                  "hull", "degen", "seconds");
    out << buffer;
    for (const SizeResult& row : report.rows) {
        std::snprintf(buffer, sizeof(buffer), "%6zu %8.3f %8.5f %6zu %6zu %9.3f\n", row.n,
                      row.rejection_rate, row.std_error, row.hull_violations, row.degenerate,
                      row.seconds);
        out << buffer;
    }
    return out.str();
}

} // namespace svt
