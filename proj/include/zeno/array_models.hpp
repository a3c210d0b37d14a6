#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "zeno/stats.hpp"

namespace zeno {

/// Angle pi/(2N) that makes an ideal N-splitter array transmit with
/// probability -> 1 as N grows.
double zeno_angle(int n_splitters);

/// End-to-end single-photon transmission of N identical splitters,
/// cos^(2N)(theta). theta defaults to pi/(2N).
double ideal_p1(int n_splitters, std::optional<double> theta = std::nullopt);

/// Array whose splitter angles are drawn independently from
/// Normal(mean_theta, sigma^2).
struct DispersionSpec {
    int n_splitters = 1;
    std::optional<double> mean_theta;  // pi/(2N) when unset
    double sigma = 0.0;
    int n_samples = 5000;
    std::uint64_t seed = 0;
    unsigned workers = 1;

    double resolved_mean() const;
    void validate() const;
};

using ThetaVector = std::vector<double>;

/// N independent normal draws. Negative angles are kept (cos^2 is even).
ThetaVector sample_thetas(const DispersionSpec& spec, std::mt19937_64& rng);

/// Product of cos^2(theta_j) over the array.
double dispersion_p1(std::span<const double> thetas);

/// Mean and standard error of dispersion_p1 over spec.n_samples arrays.
/// Sample i draws from stream (seed, i), so the result does not depend on
/// spec.workers.
EnsembleStats dispersion_ensemble(const DispersionSpec& spec);

/// Closed-form E[prod cos^2 theta_j] for theta_j ~ Normal(pi/2N, sigma^2):
/// [(1 + cos(pi/N) exp(-2 sigma^2)) / 2]^N.
double dispersion_expectation(int n_splitters, double sigma);

}  // namespace zeno
