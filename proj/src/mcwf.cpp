#include "zeno/mcwf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zeno/array_models.hpp"
#include "zeno/rng.hpp"

namespace zeno {

double McwfSpec::resolved_theta() const {
    return theta.value_or(zeno_angle(n_splitters));
}

void McwfSpec::validate() const {
    if (n_splitters < 1) throw std::domain_error("McwfSpec: n_splitters must be >= 1");
    if (n_trajectories < 1) throw std::domain_error("McwfSpec: n_trajectories must be >= 1");
    if (theta && !std::isfinite(*theta)) throw std::domain_error("McwfSpec: theta must be finite");
    (void)jump_probability(gamma, resolved_theta());
}

double jump_probability(double gamma, double theta) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("jump_probability: gamma must be >= 0");
    }
    const double s = std::sin(theta);
    const double dp = gamma + s * s;
    if (dp > 1.0) {
        throw std::domain_error("jump_probability: gamma + sin^2(theta) = " + std::to_string(dp) +
                                " exceeds 1");
    }
    return dp;
}

TrajectoryRecord run_trajectory(const McwfSpec& spec, std::mt19937_64& rng) {
    spec.validate();
    const double dp = jump_probability(spec.gamma, spec.resolved_theta());
    TrajectoryRecord rec;
    rec.survival.assign(static_cast<std::size_t>(spec.n_splitters), 0);
    for (int n = 1; n <= spec.n_splitters; ++n) {
        if (uniform01(rng) >= dp) {
            rec.survival[static_cast<std::size_t>(n - 1)] = 1;
            continue;
        }
        // collapse to vacuum; nothing reaches the remaining splitters
        rec.jump_at = n;
        break;
    }
    return rec;
}

TrajectoryRecord run_trajectory(const McwfSpec& spec, std::uint64_t index) {
    auto rng = make_stream(spec.seed, index);
    return run_trajectory(spec, rng);
}

void SurvivalTally::add(const TrajectoryRecord& record) {
    if (record.survival.size() != survivors.size()) {
        throw std::domain_error("SurvivalTally::add: trajectory length mismatch");
    }
    ++trajectories;
    const std::size_t alive =
        record.jump_at ? static_cast<std::size_t>(*record.jump_at - 1) : survivors.size();
    for (std::size_t i = 0; i < alive; ++i) ++survivors[i];
}

SurvivalTally& SurvivalTally::merge(const SurvivalTally& other) {
    if (other.survivors.size() != survivors.size()) {
        throw std::domain_error("SurvivalTally::merge: step count mismatch");
    }
    trajectories += other.trajectories;
    for (std::size_t i = 0; i < survivors.size(); ++i) survivors[i] += other.survivors[i];
    return *this;
}

EnsembleStats SurvivalTally::stats() const {
    return EnsembleStats::from_counts(trajectories, survivors);
}

SurvivalTally run_tally(const McwfSpec& spec, std::uint64_t first, std::uint64_t count) {
    spec.validate();
    const auto steps = static_cast<std::size_t>(spec.n_splitters);
    std::vector<TrajectoryRecord> records(count);
    parallel_for(count, spec.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) records[i] = run_trajectory(spec, first + i);
    });

    SurvivalTally tally(steps);
    for (const auto& rec : records) tally.add(rec);
    return tally;
}

EnsembleStats run_ensemble(const McwfSpec& spec) {
    return run_tally(spec, 0, static_cast<std::uint64_t>(spec.n_trajectories)).stats();
}

double analytic_p1_absorption(int step, int n_splitters, double gamma) {
    if (n_splitters < 1) throw std::domain_error("analytic_p1_absorption: N must be >= 1");
    if (step < 0 || step > n_splitters) throw std::domain_error("analytic_p1_absorption: step outside 0..N");
    const double s = std::sin(zeno_angle(n_splitters));
    return std::exp(-(gamma + s * s) * step);
}

double bernoulli_p1(int step, double gamma, double theta) {
    if (step < 0) throw std::domain_error("bernoulli_p1: step must be >= 0");
    return std::pow(1.0 - jump_probability(gamma, theta), step);
}

}  // namespace zeno
