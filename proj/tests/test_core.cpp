#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "svt/csv.hpp"
#include "svt/errors.hpp"
#include "svt/report.hpp"
#include "svt/sample.hpp"
#include "svt/semivariance.hpp"

using namespace svt;

TEST_CASE("validate_sample accepts well-formed input") {
    const Sample s = validate_sample({1.0, 2.0, 3.0});
    CHECK(s.size() == 3);
    CHECK(s.values() == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("validate_sample rejects negatives unless overridden") {
    CHECK_THROWS_AS(validate_sample({1.0, -2.0}), NegativeValueError);
    try {
        validate_sample({1.0, -2.0});
    } catch (const NegativeValueError& e) {
        CHECK(e.index() == 1);
    }
    const Sample s = validate_sample({1.0, -2.0}, true);
    CHECK(s.size() == 2);
}

TEST_CASE("validate_sample rejects non-finite values even with the override") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_sample({1.0, nan}), NonFiniteValueError);
    CHECK_THROWS_AS(validate_sample({inf}, true), NonFiniteValueError);
    try {
        validate_sample({1.0, nan});
    } catch (const NonFiniteValueError& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("validate_sample rejects empty input") {
    CHECK_THROWS_AS(validate_sample({}), EmptyInputError);
}

TEST_CASE("empirical_cdf conventions") {
    const Sample s = validate_sample({1.0, 2.0, 3.0});
    CHECK(empirical_cdf(s, 2.0, CdfConvention::right) == doctest::Approx(2.0 / 3.0));
    CHECK(empirical_cdf(s, 2.0, CdfConvention::left) == doctest::Approx(1.0 / 3.0));
    CHECK(empirical_cdf(s, 10.0, CdfConvention::right) == 1.0);
    CHECK(empirical_cdf(s, 10.0, CdfConvention::left) == 1.0);
}

TEST_CASE("empirical_cdf is monotone and the conventions differ by tie mass") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> dist(0, 4);
    std::vector<double> values(40);
    for (double& v : values) v = static_cast<double>(dist(gen));
    const Sample s = validate_sample(values);
    const SortedIndex idx(s);

    double prev_right = 0.0;
    for (double t = -1.0; t <= 5.5; t += 0.25) {
        const double left = empirical_cdf(s, t, CdfConvention::left);
        const double right = empirical_cdf(s, t, CdfConvention::right);
        CHECK(right >= left);
        CHECK(right >= prev_right);
        std::size_t multiplicity = 0;
        for (double v : values) multiplicity += (v == t) ? 1 : 0;
        CHECK(right - left ==
              doctest::Approx(static_cast<double>(multiplicity) / 40.0).epsilon(1e-12));
        CHECK(empirical_cdf(idx, t, CdfConvention::left) == left);
        CHECK(empirical_cdf(idx, t, CdfConvention::right) == right);
        prev_right = right;
    }
}

TEST_CASE("pooled index mapping enumerates x then y") {
    const PooledSample pooled(validate_sample({1.0, 2.0}, false, "x"),
                              validate_sample({3.0, 4.0, 5.0}, false, "y"));
    CHECK(pooled.n1() == 2);
    CHECK(pooled.n2() == 3);
    CHECK(pooled.n() == 5);
    const std::vector<double> expected{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(pooled.values() == expected);
    for (std::size_t i = 0; i < pooled.n(); ++i) CHECK(pooled.value(i) == expected[i]);
}

TEST_CASE("SortedIndex totals reconstruct direct sums") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(0.0, 1000.0);
    std::vector<double> values(20000);
    double direct = 0.0, direct_sq = 0.0;
    for (double& v : values) {
        v = dist(gen);
        direct += v;
        direct_sq += v * v;
    }
    const SortedIndex idx{std::span<const double>(values)};
    CHECK(idx.total() == doctest::Approx(direct).epsilon(1e-12));
    CHECK(idx.total_squares() == doctest::Approx(direct_sq).epsilon(1e-12));
    CHECK(idx.tie_group_starts().back() == values.size());
}

TEST_CASE("SortedIndex strict queries honor ties") {
    const SortedIndex idx{std::span<const double>(std::vector<double>{1.0, 2.0, 2.0, 3.0})};
    CHECK(idx.count_below(2.0) == 1);
    CHECK(idx.count_above(2.0) == 1);
    CHECK(idx.sum_below(2.0) == 1.0);
    CHECK(idx.sum_above(2.0) == 3.0);
    CHECK(idx.sum_squares_below(2.0) == 1.0);
    CHECK(idx.sum_squares_above(2.0) == 9.0);
    CHECK(idx.tie_group_starts() == std::vector<std::size_t>{0, 1, 3, 4});
}

TEST_CASE("read_value_lines handles headers, comments and blank lines") {
    std::istringstream in("income\n# a comment\n\n1.5\n2.5\n");
    const std::vector<double> values = read_value_lines(in);
    CHECK(values == std::vector<double>{1.5, 2.5});
}

TEST_CASE("read_value_lines reports the offending line") {
    std::istringstream in("1.0\nnot-a-number\n2.0\n");
    CHECK_THROWS_AS(read_value_lines(in), ParseError);
    std::istringstream again("1.0\nnot-a-number\n2.0\n");
    try {
        read_value_lines(again);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("read_value_lines rejects thousands separators") {
    std::istringstream in("1000\n1,000\n");
    CHECK_THROWS_AS(read_value_lines(in), ParseError);
}

TEST_CASE("read_value_lines accepts scientific notation and signs") {
    std::istringstream in("1e3\n+2.5\n-0.75\n4.25E-2\n");
    CHECK(read_value_lines(in) == std::vector<double>{1000.0, 2.5, -0.75, 0.0425});
}

TEST_CASE("textual nan in a file is caught by sample validation") {
    std::istringstream in("1.0\nnan\n2.0\n");
    const std::vector<double> values = read_value_lines(in); // strtod parses "nan"
    CHECK(values.size() == 3);
    CHECK_THROWS_AS(validate_sample(values), NonFiniteValueError);
}

TEST_CASE("semivariance matches direct summation") {
    const Sample s = validate_sample({1.0, 2.0, 3.0});
    CHECK(semivariance(s, 0.0).value == doctest::Approx(14.0 / 3.0).epsilon(1e-14));
    CHECK(semivariance(s, 3.0).value == 0.0);
    CHECK(semivariance(s, 1.0).value == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("stop_loss_moment generalizes the semivariance") {
    const Sample s = validate_sample({1.0, 2.0, 3.0});
    CHECK(stop_loss_moment(s, 1.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(stop_loss_moment(s, 1.0, 2.0).value == semivariance(s, 1.0).value);
    CHECK(stop_loss_moment(validate_sample({5.0}), 10.0, 3.0).value == 0.0);
    CHECK_THROWS_AS(stop_loss_moment(s, 1.0, 0.0), NonPositivePowerError);
    CHECK_THROWS_AS(stop_loss_moment(s, 1.0, -2.0), NonPositivePowerError);
}

TEST_CASE("semivariance is nonincreasing in the target and scales quadratically") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> dist(0.0, 50.0);
    std::vector<double> values(200);
    for (double& v : values) v = dist(gen);
    const Sample s = validate_sample(values);

    double prev = std::numeric_limits<double>::infinity();
    for (double t = 0.0; t <= 55.0; t += 2.5) {
        const double current = semivariance(s, t).value;
        CHECK(current <= prev);
        CHECK(current >= 0.0);
        prev = current;
    }

    const double c = 3.7;
    std::vector<double> scaled = values;
    for (double& v : scaled) v *= c;
    const Sample sc = validate_sample(scaled);
    for (double t : {0.0, 5.0, 20.0}) {
        CHECK(semivariance(sc, c * t).value ==
              doctest::Approx(c * c * semivariance(s, t).value).epsilon(1e-12));
        CHECK(stop_loss_moment(sc, c * t, 3.0).value ==
              doctest::Approx(c * c * c * stop_loss_moment(s, t, 3.0).value).epsilon(1e-12));
    }

    // At a target at or below the minimum the semivariance is the raw second
    // moment about the target.
    const double t0 = -1.0;
    double second_moment = 0.0;
    for (double v : values) second_moment += (v - t0) * (v - t0);
    second_moment /= static_cast<double>(values.size());
    CHECK(semivariance(s, t0).value == doctest::Approx(second_moment).epsilon(1e-12));
}

TEST_CASE("fractional stop-loss powers use strict exceedance") {
    const Sample s = validate_sample({1.0, 2.0, 3.0});
    // only the value 3 exceeds the target: (3-2)^0.5 / 3
    CHECK(stop_loss_moment(s, 2.0, 0.5).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // a tied target contributes nothing at any power
    CHECK(stop_loss_moment(s, 3.0, 0.5).value == 0.0);
}

TEST_CASE("compensated accumulation tracks a long-double oracle at large n") {
    std::mt19937 gen(47);
    // adversarial spread of magnitudes
    std::lognormal_distribution<double> dist(8.0, 3.0);
    const std::size_t n = 1000000;
    std::vector<double> values(n);
    long double exact_sum = 0.0L, exact_sq = 0.0L;
    for (double& v : values) {
        v = dist(gen);
        exact_sum += static_cast<long double>(v);
        exact_sq += static_cast<long double>(v) * static_cast<long double>(v);
    }
    const SortedIndex idx{std::span<const double>(values)};
    CHECK(std::abs(idx.total() - static_cast<double>(exact_sum)) <=
          1e-12 * static_cast<double>(exact_sum));
    CHECK(std::abs(idx.total_squares() - static_cast<double>(exact_sq)) <=
          1e-12 * static_cast<double>(exact_sq));

    const Sample s = validate_sample(std::move(values));
    const double target = 3000.0;
    long double excess = 0.0L;
    for (double v : s.values()) {
        if (v > target) {
            const long double d = static_cast<long double>(v) - target;
            excess += d * d;
        }
    }
    const double oracle = static_cast<double>(excess / static_cast<long double>(n));
    CHECK(semivariance(s, target).value == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("describe matches the moment definitions") {
    const DescriptiveStats s1 = describe(validate_sample({1.0, 2.0, 3.0}));
    CHECK(s1.n == 3);
    CHECK(s1.mean == doctest::Approx(2.0));
    CHECK(s1.range == doctest::Approx(2.0));
    CHECK(s1.skewness == doctest::Approx(0.0));
    CHECK(s1.sd == doctest::Approx(1.0));

    const DescriptiveStats s2 = describe(validate_sample({0.0, 0.0, 0.0, 1.0}));
    CHECK(s2.kurtosis == doctest::Approx(0.328125 / 4.0 / (0.1875 * 0.1875)).epsilon(1e-12));
    CHECK(s2.kurtosis == doctest::Approx(2.333333333).epsilon(1e-6));
}

TEST_CASE("describe skewness and kurtosis are scale invariant") {
    std::mt19937 gen(31);
    std::lognormal_distribution<double> dist(0.0, 0.8);
    std::vector<double> values(500);
    for (double& v : values) v = dist(gen);
    const DescriptiveStats base = describe(validate_sample(values));
    std::vector<double> scaled = values;
    for (double& v : scaled) v *= 41.25;
    const DescriptiveStats after = describe(validate_sample(scaled));
    CHECK(after.skewness == doctest::Approx(base.skewness).epsilon(1e-9));
    CHECK(after.kurtosis == doctest::Approx(base.kurtosis).epsilon(1e-9));
}
