// Regenerates the bundled synthetic income datasets under data/. The two
// states are lognormal draws with deliberately different spread so the
// semivariance test has a clear signal; parameters are chosen so the summary
// moments resemble household-income survey data. Committed outputs are
// fixtures; rerun this only when the fixtures must change.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "svt/montecarlo.hpp"
#include "svt/rng.hpp"

namespace {

void write_state(const std::string& path, const svt::DistributionSpec& spec, std::size_t n,
                 std::uint64_t seed) {
    svt::RngStream stream = svt::replication_stream(seed, n, 0);
    const svt::Sample sample = svt::sample_from(spec, n, stream);

    std::FILE* out = std::fopen(path.c_str(), "w");
    if (!out) {
        std::perror(path.c_str());
        std::exit(1);
    }
    std::fprintf(out, "income\n");
    for (double v : sample.values()) {
        std::fprintf(out, "%.2f\n", v);
    }
    std::fclose(out);
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    write_state(dir + "/state_a_income.csv", svt::DistributionSpec::lognormal(10.1, 0.55), 1000,
                827111);
    write_state(dir + "/state_b_income.csv", svt::DistributionSpec::lognormal(9.3, 0.85), 1000,
                911419);
    std::printf("wrote %s/state_a_income.csv and %s/state_b_income.csv\n", dir.c_str(),
                dir.c_str());
    return 0;
}
