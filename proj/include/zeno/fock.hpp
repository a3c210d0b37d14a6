#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zeno {

/// Maximum total photon number kept in a two-mode (or single-mode) space.
class FockCutoff {
public:
    explicit FockCutoff(int n_max = 2);

    int n_max() const { return n_max_; }

    /// Number of two-mode states |n_c, n_d> with n_c + n_d <= n_max.
    std::size_t basis_size() const;

    friend bool operator==(FockCutoff, FockCutoff) = default;

private:
    int n_max_;
};

/// Position of |n_c, n_d> in the canonical ordering: ascending total photon
/// number, then descending n_c. (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
std::size_t basis_index(int n_c, int n_d, FockCutoff cutoff);

/// Inverse of basis_index.
std::pair<int, int> basis_label(std::size_t index, FockCutoff cutoff);

/// Pure state on two modes, amplitudes in canonical basis order.
class TwoModeState {
public:
    explicit TwoModeState(FockCutoff cutoff);
    TwoModeState(FockCutoff cutoff, Eigen::VectorXcd amplitudes);

    /// Number state |n_c, n_d>.
    static TwoModeState number(int n_c, int n_d, FockCutoff cutoff);

    FockCutoff cutoff() const { return cutoff_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    std::complex<double> amplitude(int n_c, int n_d) const;
    double norm_squared() const { return amplitudes_.squaredNorm(); }

private:
    FockCutoff cutoff_;
    Eigen::VectorXcd amplitudes_;
};

/// Diagonal single-mode state: probs[k] is the probability of k photons.
/// `leaked` is probability mass dropped by truncation upstream.
struct PortMixture {
    std::vector<double> probs;
    double leaked = 0.0;

    int n_max() const { return static_cast<int>(probs.size()) - 1; }
    double total() const;

    static PortMixture number(int k, int n_max);
};

/// Beam-splitter angle: transmission amplitude cos(theta), reflection sin(theta).
struct BeamSplitterAngle {
    double theta = 0.0;
};

/// Beam-splitter unitary in the canonical two-mode basis, with the mode map
///   a^dag -> cos(t) c^dag - sin(t) d^dag
///   b^dag -> sin(t) c^dag + cos(t) d^dag
/// Column j is the image of input basis state j (|n_a, n_b> labelled like
/// |n_c, n_d>). Block diagonal in total photon number.
Eigen::MatrixXcd beam_splitter_matrix(double theta, FockCutoff cutoff);

TwoModeState apply_beam_splitter(const TwoModeState& state, double theta);
TwoModeState apply_beam_splitter(const TwoModeState& state, const Eigen::MatrixXcd& unitary);

/// Partial trace over the reflected port d.
PortMixture trace_out_reflected(const TwoModeState& state);

/// Bose-Einstein distribution nbar^k / (1+nbar)^(k+1), k = 0..ancilla_max.
/// The dropped tail goes to `leaked` unless `renormalize` is set.
PortMixture thermal_mixture(double nbar, int ancilla_max = 1, bool renormalize = false);

/// Weighted set of two-mode number states |n_a, n_b> (input side of a splitter).
struct ProductMixture {
    FockCutoff cutoff;
    std::vector<std::pair<std::pair<int, int>, double>> components;
    double leaked = 0.0;

    double total() const;
};

/// Product of the port and ancilla distributions. Components whose total
/// photon number exceeds the cutoff are dropped into `leaked`, as is the
/// ancilla's own leaked mass.
ProductMixture tensor_with_ancilla(const PortMixture& port, const PortMixture& ancilla,
                                   FockCutoff cutoff);

}  // namespace zeno
