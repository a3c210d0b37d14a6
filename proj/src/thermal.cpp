#include "zeno/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/array_models.hpp"

namespace zeno {

double ThermalArraySpec::resolved_theta() const {
    return theta.value_or(zeno_angle(n_splitters));
}

void ThermalArraySpec::validate() const {
    if (n_splitters < 1) throw std::domain_error("ThermalArraySpec: n_splitters must be >= 1");
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw std::domain_error("ThermalArraySpec: nbar must be >= 0");
    if (ancilla_max < 0) throw std::domain_error("ThermalArraySpec: ancilla_max must be >= 0");
    if (theta && !std::isfinite(*theta)) throw std::domain_error("ThermalArraySpec: theta must be finite");
}

StepCoefficients step_coefficients(double alpha, double beta, double theta) {
    if (alpha < 0.0 || beta < 0.0) throw std::domain_error("step_coefficients: alpha, beta must be >= 0");
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double cos2t = std::cos(2.0 * theta);
    return {
        .a0 = alpha * s2 + 2.0 * beta * c2 * s2,
        .a1 = alpha * c2 + beta * cos2t * cos2t,
        .a2 = 2.0 * beta * c2 * s2,
    };
}

PortMixture propagate_step(const PortMixture& port, const PortMixture& ancilla,
                           const Eigen::MatrixXcd& unitary, FockCutoff cutoff) {
    const ProductMixture input = tensor_with_ancilla(port, ancilla, cutoff);
    PortMixture out;
    out.probs.assign(static_cast<std::size_t>(cutoff.n_max()) + 1, 0.0);
    out.leaked = input.leaked;
    for (const auto& [label, weight] : input.components) {
        const auto traced =
            trace_out_reflected(apply_beam_splitter(TwoModeState::number(label.first, label.second, cutoff), unitary));
        for (std::size_t k = 0; k < out.probs.size(); ++k) out.probs[k] += weight * traced.probs[k];
    }
    return out;
}

std::vector<PortMixture> propagate_thermal_array(const ThermalArraySpec& spec) {
    spec.validate();
    if (spec.cutoff.n_max() < 1) throw std::domain_error("propagate_thermal_array: cutoff too small");
    const auto unitary = beam_splitter_matrix(spec.resolved_theta(), spec.cutoff);
    const PortMixture ancilla = thermal_mixture(spec.nbar, spec.ancilla_max, spec.renormalize_ancilla);

    std::vector<PortMixture> ports;
    ports.reserve(static_cast<std::size_t>(spec.n_splitters));
    PortMixture port = PortMixture::number(1, spec.cutoff.n_max());
    for (int j = 0; j < spec.n_splitters; ++j) {
        port = propagate_step(port, ancilla, unitary, spec.cutoff);
        ports.push_back(port);
    }
    return ports;
}

double thermal_p1_approx(int n_splitters, double theta, double alpha) {
    if (n_splitters < 1) throw std::domain_error("thermal_p1_approx: N must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("thermal_p1_approx: alpha must be in [0, 1]");
    const double c = std::cos(theta);
    return std::pow(alpha * c * c, n_splitters);
}

}  // namespace zeno
