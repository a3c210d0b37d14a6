#include "zeno/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zeno {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

FockCutoff::FockCutoff(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
        throw std::domain_error("FockCutoff: n_max must be >= 1, got " + std::to_string(n_max));
    }
}

std::size_t FockCutoff::basis_size() const {
    const auto n = static_cast<std::size_t>(n_max_);
    return (n + 1) * (n + 2) / 2;
}

std::size_t basis_index(int n_c, int n_d, FockCutoff cutoff) {
    if (n_c < 0 || n_d < 0 || n_c + n_d > cutoff.n_max()) {
        throw std::domain_error("basis_index: (" + std::to_string(n_c) + ", " +
                                std::to_string(n_d) + ") outside cutoff " +
                                std::to_string(cutoff.n_max()));
    }
    const auto total = static_cast<std::size_t>(n_c + n_d);
    // states with fewer photons come first; within a block n_c runs total..0
    return total * (total + 1) / 2 + static_cast<std::size_t>(n_d);
}

std::pair<int, int> basis_label(std::size_t index, FockCutoff cutoff) {
    if (index >= cutoff.basis_size()) {
        throw std::domain_error("basis_label: index out of range");
    }
    int total = 0;
    while (static_cast<std::size_t>(total + 1) * (total + 2) / 2 <= index) ++total;
    const int n_d = static_cast<int>(index - static_cast<std::size_t>(total) * (total + 1) / 2);
    return {total - n_d, n_d};
}

TwoModeState::TwoModeState(FockCutoff cutoff)
    : cutoff_(cutoff), amplitudes_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cutoff.basis_size()))) {}

TwoModeState::TwoModeState(FockCutoff cutoff, Eigen::VectorXcd amplitudes)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != cutoff_.basis_size()) {
        throw std::domain_error("TwoModeState: amplitude vector does not match cutoff");
    }
}

TwoModeState TwoModeState::number(int n_c, int n_d, FockCutoff cutoff) {
    TwoModeState s(cutoff);
    s.amplitudes_[static_cast<Eigen::Index>(basis_index(n_c, n_d, cutoff))] = 1.0;
    return s;
}

std::complex<double> TwoModeState::amplitude(int n_c, int n_d) const {
    return amplitudes_[static_cast<Eigen::Index>(basis_index(n_c, n_d, cutoff_))];
}

double PortMixture::total() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

PortMixture PortMixture::number(int k, int n_max) {
    if (k < 0 || k > n_max) throw std::domain_error("PortMixture::number: k outside 0..n_max");
    PortMixture m;
    m.probs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    m.probs[static_cast<std::size_t>(k)] = 1.0;
    return m;
}

Eigen::MatrixXcd beam_splitter_matrix(double theta, FockCutoff cutoff) {
    if (!std::isfinite(theta)) throw std::domain_error("beam_splitter_matrix: theta must be finite");
    const auto dim = static_cast<Eigen::Index>(cutoff.basis_size());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto [na, nb] = basis_label(static_cast<std::size_t>(col), cutoff);
        const int n = na + nb;
        const double norm_in = std::sqrt(factorial(na) * factorial(nb));
        // (c a_c - s a_d)^na (s a_c + c a_d)^nb |0>, expanded binomially
        for (int i = 0; i <= na; ++i) {
            for (int j = 0; j <= nb; ++j) {
                const int nc = i + j;
                const int nd = n - nc;
                const double coeff = binomial(na, i) * binomial(nb, j) *
                                     std::pow(c, i) * std::pow(-s, na - i) *
                                     std::pow(s, j) * std::pow(c, nb - j) *
                                     std::sqrt(factorial(nc) * factorial(nd)) / norm_in;
                u(static_cast<Eigen::Index>(basis_index(nc, nd, cutoff)), col) += coeff;
            }
        }
    }
    return u;
}

TwoModeState apply_beam_splitter(const TwoModeState& state, double theta) {
    return apply_beam_splitter(state, beam_splitter_matrix(theta, state.cutoff()));
}

TwoModeState apply_beam_splitter(const TwoModeState& state, const Eigen::MatrixXcd& unitary) {
    if (unitary.rows() != state.amplitudes().size() || unitary.cols() != state.amplitudes().size()) {
        throw std::domain_error("apply_beam_splitter: cutoff mismatch between state and matrix");
    }
    return TwoModeState(state.cutoff(), unitary * state.amplitudes());
}

PortMixture trace_out_reflected(const TwoModeState& state) {
    const FockCutoff cutoff = state.cutoff();
    PortMixture out;
    out.probs.assign(static_cast<std::size_t>(cutoff.n_max()) + 1, 0.0);
    const auto& amps = state.amplitudes();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const auto [nc, nd] = basis_label(static_cast<std::size_t>(i), cutoff);
        (void)nd;
        out.probs[static_cast<std::size_t>(nc)] += std::norm(amps[i]);
    }
    return out;
}

PortMixture thermal_mixture(double nbar, int ancilla_max, bool renormalize) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("thermal_mixture: nbar must be finite and >= 0");
    }
    if (ancilla_max < 0) throw std::domain_error("thermal_mixture: ancilla_max must be >= 0");

    PortMixture m;
    m.probs.resize(static_cast<std::size_t>(ancilla_max) + 1);
    const double ratio = nbar / (1.0 + nbar);
    double p = 1.0 / (1.0 + nbar);
    double kept = 0.0;
    for (auto& q : m.probs) {
        q = p;
        kept += p;
        p *= ratio;
    }
    if (renormalize) {
        for (auto& q : m.probs) q /= kept;
        m.leaked = 0.0;
    } else {
        // exact geometric tail: ratio^(ancilla_max+1)
        m.leaked = std::pow(ratio, ancilla_max + 1);
    }
    return m;
}

double ProductMixture::total() const {
    double t = 0.0;
    for (const auto& c : components) t += c.second;
    return t;
}

ProductMixture tensor_with_ancilla(const PortMixture& port, const PortMixture& ancilla,
                                   FockCutoff cutoff) {
    ProductMixture out{cutoff, {}, port.leaked + port.total() * ancilla.leaked};
    for (int k = 0; k <= port.n_max(); ++k) {
        const double pk = port.probs[static_cast<std::size_t>(k)];
        if (pk == 0.0) continue;
        for (int m = 0; m <= ancilla.n_max(); ++m) {
            const double w = pk * ancilla.probs[static_cast<std::size_t>(m)];
            if (w == 0.0) continue;
            if (k + m > cutoff.n_max()) {
                out.leaked += w;
            } else {
                out.components.push_back({{k, m}, w});
            }
        }
    }
    return out;
}

}  // namespace zeno
