#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "zeno/array_models.hpp"
#include "zeno/rng.hpp"

using namespace zeno;
using std::numbers::pi;

// Frozen from a 30-digit evaluation: cos^100(pi/100).
constexpr double kIdealP1At50 = 0.95184207879777755;
// [(1 + cos(pi/100) exp(-2e-4)) / 2]^100, same evaluation.
constexpr double kExpectationN100Sigma001 = 0.96592213081557887;

TEST_CASE("ideal transmission") {
    CHECK(ideal_p1(1, pi / 2) < 1e-30);
    CHECK(ideal_p1(1, 0.0) == 1.0);
    CHECK(ideal_p1(50) == doctest::Approx(kIdealP1At50).epsilon(1e-13));
    CHECK(std::abs(ideal_p1(50, pi / 100) - kIdealP1At50) < 1e-5);
    CHECK(ideal_p1(2) == doctest::Approx(0.25));
    CHECK(ideal_p1(3) == doctest::Approx(0.421875));
    CHECK_THROWS_AS(ideal_p1(0), std::domain_error);
}

TEST_CASE("ideal transmission rises monotonically towards one") {
    double prev = ideal_p1(1);
    for (int n = 2; n <= 10000; ++n) {
        const double p = ideal_p1(n);
        REQUIRE(p > prev);
        prev = p;
    }
    CHECK(ideal_p1(10000) > 0.9997);
    // cos^(2N)(pi/2N) ~ exp(-pi^2/4N)
    CHECK(ideal_p1(10000) == doctest::Approx(std::exp(-pi * pi / 40000)).epsilon(1e-8));
}

TEST_CASE("theta sampling") {
    DispersionSpec spec{.n_splitters = 20, .sigma = 0.0};
    auto rng = make_stream(1, 0);
    for (double t : sample_thetas(spec, rng)) CHECK(t == zeno_angle(20));

    spec.sigma = 0.01;
    auto r1 = make_stream(99, 3);
    auto r2 = make_stream(99, 3);
    CHECK(sample_thetas(spec, r1) == sample_thetas(spec, r2));

    DispersionSpec one{.n_splitters = 1, .sigma = 0.01};
    auto rng2 = make_stream(5, 0);
    double sum = 0.0;
    const int draws = 1'000'000;
    for (int i = 0; i < draws; ++i) sum += sample_thetas(one, rng2)[0];
    CHECK(std::abs(sum / draws - zeno_angle(1)) < 5 * one.sigma / 1000);
}

TEST_CASE("dispersed array transmission") {
    const std::vector<double> same(30, 0.07);
    CHECK(dispersion_p1(same) == doctest::Approx(ideal_p1(30, 0.07)).epsilon(1e-13));
    CHECK(dispersion_p1(std::vector<double>{0.1, pi / 2, 0.2}) < 1e-30);
    CHECK(dispersion_p1(std::vector<double>{pi / 6, pi / 4}) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK_THROWS_AS(dispersion_p1(std::vector<double>{}), std::domain_error);
}

TEST_CASE("dispersed transmission is bounded by the best splitter") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> normal(0.05, 0.3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> thetas(1 + trial % 40);
        for (auto& t : thetas) t = normal(rng);
        double best = 0.0;
        for (double t : thetas) best = std::max(best, std::cos(t) * std::cos(t));
        const double p = dispersion_p1(thetas);
        CHECK(p >= 0.0);
        CHECK(p <= best + 1e-15);
    }
}

TEST_CASE("closed-form expectation") {
    for (int n : {1, 3, 50, 1000}) {
        CHECK(dispersion_expectation(n, 0.0) == doctest::Approx(ideal_p1(n)).epsilon(1e-13));
    }
    CHECK(std::abs(dispersion_expectation(100, 0.01) - kExpectationN100Sigma001) < 1e-12);

    double prev = dispersion_expectation(100, 0.0);
    for (int i = 1; i <= 50; ++i) {
        const double v = dispersion_expectation(100, 0.002 * i);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("closed form agrees with a 10^6 sample Monte Carlo") {
    // wide sigma so the per-sample spread makes this a real check
    DispersionSpec spec{.n_splitters = 4, .sigma = 0.2, .n_samples = 1'000'000, .seed = 12, .workers = 4};
    const auto stats = dispersion_ensemble(spec);
    CHECK(std::abs(stats.mean(0) - dispersion_expectation(4, 0.2)) < 4 * stats.standard_error(0));
}

TEST_CASE("Jensen bound below the ideal curve") {
    for (int n : {3, 10, 50, 200}) {
        CHECK(dispersion_expectation(n, 0.0) == doctest::Approx(ideal_p1(n)).epsilon(1e-13));
        for (double sigma : {1e-4, 1e-3, 1e-2, 0.05}) {
            if (pi / (2 * n) + 4 * sigma >= pi / 4) continue;
            CHECK(dispersion_expectation(n, sigma) < ideal_p1(n));
        }
    }
}

TEST_CASE("ensemble statistics") {
    DispersionSpec flat{.n_splitters = 40, .sigma = 0.0, .n_samples = 300, .seed = 1};
    const auto s0 = dispersion_ensemble(flat);
    CHECK(s0.mean(0) == doctest::Approx(ideal_p1(40)).epsilon(1e-13));
    CHECK(s0.standard_error(0) == 0.0);

    DispersionSpec spec{.n_splitters = 100, .sigma = 0.01, .n_samples = 5000, .seed = 2024};
    const auto s = dispersion_ensemble(spec);
    CHECK(std::abs(s.mean(0) - dispersion_expectation(100, 0.01)) < 4 * s.standard_error(0));

    spec.workers = 7;
    const auto parallel = dispersion_ensemble(spec);
    CHECK(parallel.mean(0) == s.mean(0));
    CHECK(parallel.standard_error(0) == s.standard_error(0));

    DispersionSpec wide{.n_splitters = 1000, .sigma = 0.01, .n_samples = 2000, .seed = 4};
    DispersionSpec narrow = wide;
    narrow.sigma = 0.001;
    CHECK(dispersion_ensemble(wide).mean(0) < dispersion_ensemble(narrow).mean(0));

    CHECK_THROWS_AS(dispersion_ensemble(DispersionSpec{.n_splitters = 0}), std::domain_error);
    CHECK_THROWS_AS(dispersion_ensemble(DispersionSpec{.n_splitters = 5, .sigma = -1.0}), std::domain_error);
    CHECK_THROWS_AS(dispersion_ensemble(DispersionSpec{.n_splitters = 5, .n_samples = 0}), std::domain_error);
}
