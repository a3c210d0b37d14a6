#pragma once

namespace zeno {

/// Optimal array length for absorption coefficient gamma.
struct CriticalResult {
    double gamma = 0.0;
    double n_real = 0.0;       // stationary point of the continuous P1(N)
    int n_int = 0;             // integer argmax of P1(N)
    double p1_at_max = 0.0;    // P1(n_int)
    double asymptotic_estimate = 0.0;  // pi / (2 sqrt(gamma))
};

/// P1(N) = exp(-gamma N) cos^(2N)(pi/2N): end-to-end transmission of an
/// N-splitter Zeno array that also absorbs gamma per splitter.
double absorbing_array_p1(int n_splitters, double gamma);

/// gamma at which d/dN ln P1(N) vanishes:
///   2 ln cos(pi/2N) + (pi/N) tan(pi/2N).
/// Strictly decreasing in n_c; requires n_c >= 2.
double critical_gamma(double n_c);

/// Solves critical_gamma(n) = gamma by bracketed root finding and locates the
/// integer argmax of P1 around it. Ties resolve to the smaller N.
CriticalResult solve_critical_n(double gamma);

/// Large-N expansion of the stationary condition, pi / (2 sqrt(gamma)).
double asymptotic_critical_n(double gamma);

/// The alternative closed form (1/2) sqrt(pi / gamma), reported for comparison.
double printed_asymptotic_critical_n(double gamma);

}  // namespace zeno
