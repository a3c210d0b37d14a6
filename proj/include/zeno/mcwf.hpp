#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zeno/stats.hpp"

namespace zeno {

/// Identical lossy splitters: each one absorbs with probability gamma and
/// reflects with probability sin^2(theta).
struct McwfSpec {
    int n_splitters = 1;
    double gamma = 0.0;
    std::optional<double> theta;  // pi/(2N) when unset
    int n_trajectories = 5000;
    std::uint64_t seed = 0;
    unsigned workers = 1;

    double resolved_theta() const;
    void validate() const;
};

/// Per-splitter jump probability (gamma + sin^2 theta) <sigma+ sigma->, with
/// <sigma+ sigma-> = 1 while the photon is still in the array.
double jump_probability(double gamma, double theta);

/// One quantum-jump realization. survival[n-1] is P1(n) at splitter n;
/// jump_at is the 1-based splitter where the photon was lost, if any.
struct TrajectoryRecord {
    std::vector<std::uint8_t> survival;
    std::optional<int> jump_at;
};

TrajectoryRecord run_trajectory(const McwfSpec& spec, std::mt19937_64& rng);

/// Trajectory `index` of the ensemble defined by spec.seed.
TrajectoryRecord run_trajectory(const McwfSpec& spec, std::uint64_t index);

/// Integer survivor counts per splitter; merges exactly.
struct SurvivalTally {
    std::uint64_t trajectories = 0;
    std::vector<std::uint64_t> survivors;

    explicit SurvivalTally(std::size_t steps = 0) : survivors(steps, 0) {}

    void add(const TrajectoryRecord& record);
    SurvivalTally& merge(const SurvivalTally& other);
    EnsembleStats stats() const;
};

/// Tally of trajectories [first, first + count) of the ensemble defined by spec.seed.
SurvivalTally run_tally(const McwfSpec& spec, std::uint64_t first, std::uint64_t count);

/// Per-splitter survival fraction over spec.n_trajectories trajectories.
/// Bit-identical for a given seed whatever spec.workers is.
EnsembleStats run_ensemble(const McwfSpec& spec);

/// exp(-(gamma + sin^2(pi/2N)) n), the continuous-decay approximation.
double analytic_p1_absorption(int step, int n_splitters, double gamma);

/// (1 - gamma - sin^2 theta)^n, the exact mean of the simulated process.
double bernoulli_p1(int step, double gamma, double theta);

}  // namespace zeno
