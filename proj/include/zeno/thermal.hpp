#pragma once

#include <optional>
#include <vector>

#include "zeno/fock.hpp"

namespace zeno {

/// Uniform array with a fresh thermal state entering every b_j port.
struct ThermalArraySpec {
    int n_splitters = 1;
    std::optional<double> theta;  // pi/(2N) when unset
    double nbar = 0.0;
    FockCutoff cutoff{2};
    int ancilla_max = 1;
    bool renormalize_ancilla = false;

    double resolved_theta() const;
    void validate() const;
};

/// Photon-number distribution at c_1 for a single photon at a_1 and the
/// two-term thermal input alpha|0><0| + beta|1><1| at b_1.
struct StepCoefficients {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
};

StepCoefficients step_coefficients(double alpha, double beta, double theta);

/// One splitter: port mixture in, port mixture out at the transmitted port.
PortMixture propagate_step(const PortMixture& port, const PortMixture& ancilla,
                           const Eigen::MatrixXcd& unitary, FockCutoff cutoff);

/// Mixtures at c_1..c_N for a single photon entering a_1. Computed exactly in
/// the truncated space; truncation loss accumulates in `leaked`.
std::vector<PortMixture> propagate_thermal_array(const ThermalArraySpec& spec);

/// alpha^N cos^(2N)(theta): the single-photon survival with every thermal
/// one-photon contribution dropped.
double thermal_p1_approx(int n_splitters, double theta, double alpha);

}  // namespace zeno
