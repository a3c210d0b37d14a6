#include "zeno/array_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zeno/rng.hpp"

namespace zeno {

double zeno_angle(int n_splitters) {
    if (n_splitters < 1) throw std::domain_error("zeno_angle: N must be >= 1");
    return std::numbers::pi / (2.0 * n_splitters);
}

double ideal_p1(int n_splitters, std::optional<double> theta) {
    if (n_splitters < 1) {
        throw std::domain_error("ideal_p1: N must be >= 1, got " + std::to_string(n_splitters));
    }
    const double t = theta.value_or(zeno_angle(n_splitters));
    const double c = std::cos(t);
    return std::pow(c * c, n_splitters);
}

double DispersionSpec::resolved_mean() const {
    return mean_theta.value_or(zeno_angle(n_splitters));
}

void DispersionSpec::validate() const {
    if (n_splitters < 1) throw std::domain_error("DispersionSpec: n_splitters must be >= 1");
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::domain_error("DispersionSpec: sigma must be >= 0");
    if (n_samples < 1) throw std::domain_error("DispersionSpec: n_samples must be >= 1");
    if (mean_theta && !std::isfinite(*mean_theta)) throw std::domain_error("DispersionSpec: mean_theta must be finite");
}

ThetaVector sample_thetas(const DispersionSpec& spec, std::mt19937_64& rng) {
    spec.validate();
    const double mean = spec.resolved_mean();
    ThetaVector thetas(static_cast<std::size_t>(spec.n_splitters), mean);
    if (spec.sigma == 0.0) return thetas;
    std::normal_distribution<double> normal(mean, spec.sigma);
    for (auto& t : thetas) t = normal(rng);
    return thetas;
}

double dispersion_p1(std::span<const double> thetas) {
    if (thetas.empty()) throw std::domain_error("dispersion_p1: empty theta vector");
    double p = 1.0;
    for (double t : thetas) {
        const double c = std::cos(t);
        p *= c * c;
    }
    return p;
}

EnsembleStats dispersion_ensemble(const DispersionSpec& spec) {
    spec.validate();
    const auto samples = static_cast<std::size_t>(spec.n_samples);
    std::vector<double> p1(samples);
    parallel_for(samples, spec.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto rng = make_stream(spec.seed, i);
            p1[i] = dispersion_p1(sample_thetas(spec, rng));
        }
    });

    EnsembleStats stats(1);
    for (double v : p1) stats.add(0, v);
    return stats;
}

double dispersion_expectation(int n_splitters, double sigma) {
    if (n_splitters < 1) throw std::domain_error("dispersion_expectation: N must be >= 1");
    if (!(sigma >= 0.0)) throw std::domain_error("dispersion_expectation: sigma must be >= 0");
    // E[cos^2 t] = (1 + E[cos 2t]) / 2 and E[cos 2t] = cos(2 mean) exp(-2 sigma^2)
    const double mean_cos2 =
        0.5 * (1.0 + std::cos(std::numbers::pi / n_splitters) * std::exp(-2.0 * sigma * sigma));
    return std::pow(mean_cos2, n_splitters);
}

}  // namespace zeno
