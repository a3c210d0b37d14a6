#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "zeno/rng.hpp"
#include "zeno/stats.hpp"

using namespace zeno;

TEST_CASE("mean and standard error of a small sample") {
    EnsembleStats s(1);
    for (double v : {1.0, 2.0, 3.0, 4.0}) s.add(0, v);
    CHECK(s.count(0) == 4);
    CHECK(s.mean(0) == doctest::Approx(2.5));
    CHECK(s.variance(0) == doctest::Approx(1.25));
    CHECK(s.standard_error(0) == doctest::Approx(std::sqrt(1.25 / 4)));
}

TEST_CASE("constant samples have exactly zero spread") {
    EnsembleStats s(1);
    for (int i = 0; i < 5000; ++i) s.add(0, 0.95184207879777755);
    CHECK(s.mean(0) == 0.95184207879777755);
    CHECK(s.standard_error(0) == 0.0);
}

TEST_CASE("0/1 counts give sqrt(p(1-p)/M)") {
    const std::vector<std::uint64_t> survivors{5000, 4000, 2500, 0};
    const auto s = EnsembleStats::from_counts(5000, survivors);
    CHECK(s.mean(1) == 0.8);
    CHECK(s.standard_error(1) == doctest::Approx(std::sqrt(0.8 * 0.2 / 5000)));
    CHECK(s.standard_error(0) == 0.0);
    CHECK(s.standard_error(3) == 0.0);
    CHECK_THROWS(EnsembleStats::from_counts(10, std::vector<std::uint64_t>{11}));
}

TEST_CASE("merging equals pooling, in any split") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> cut(0, 400);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs(400);
        for (auto& x : xs) x = u(rng);
        const auto k = static_cast<std::size_t>(cut(rng));

        EnsembleStats pooled(1), a(1), b(1);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            pooled.add(0, xs[i]);
            (i < k ? a : b).add(0, xs[i]);
        }
        EnsembleStats ab = a;
        ab.merge(b);
        EnsembleStats ba = b;
        ba.merge(a);
        CHECK(ab.count(0) == pooled.count(0));
        CHECK(std::abs(ab.mean(0) - pooled.mean(0)) < 1e-13);
        CHECK(std::abs(ab.variance(0) - pooled.variance(0)) < 1e-13);
        CHECK(std::abs(ba.mean(0) - ab.mean(0)) < 1e-15);
    }
    EnsembleStats two(2);
    CHECK_THROWS(two.merge(EnsembleStats(3)));
}

TEST_CASE("seeded streams") {
    auto a = make_stream(42, 7);
    auto b = make_stream(42, 7);
    auto c = make_stream(42, 8);
    auto d = make_stream(43, 7);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());

    auto e = make_stream(1, 0);
    for (int i = 0; i < 10000; ++i) {
        const double r = uniform01(e);
        REQUIRE(r >= 0.0);
        REQUIRE(r < 1.0);
    }
}

TEST_CASE("parallel_for covers every index once") {
    for (unsigned workers : {1u, 3u, 8u, 64u}) {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) ++hits[i];
        });
        for (int h : hits) REQUIRE(h == 1);
    }
    CHECK_THROWS_AS(parallel_for(10, 4, [](std::size_t, std::size_t) { throw std::runtime_error("x"); }),
                    std::runtime_error);
}
