#include "zeno/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

namespace zeno {

namespace {

constexpr double kTieTolerance = 1e-15;

// log P1(N); -inf at N = 1 where the splitter is fully reflecting.
double log_p1(int n, double gamma) {
    const double x = std::numbers::pi / (2.0 * n);
    const double s = std::sin(0.5 * x);
    // ln cos x = log1p(-2 sin^2(x/2)), accurate for small x
    return -gamma * n + 2.0 * n * std::log1p(-2.0 * s * s);
}

}  // namespace

double absorbing_array_p1(int n_splitters, double gamma) {
    if (n_splitters < 1) throw std::domain_error("absorbing_array_p1: N must be >= 1");
    if (!(gamma >= 0.0)) throw std::domain_error("absorbing_array_p1: gamma must be >= 0");
    return std::exp(log_p1(n_splitters, gamma));
}

double critical_gamma(double n_c) {
    if (!(n_c >= 2.0) || !std::isfinite(n_c)) {
        throw std::domain_error("critical_gamma: n_c must be >= 2, got " + std::to_string(n_c));
    }
    const double x = std::numbers::pi / (2.0 * n_c);
    const double s = std::sin(0.5 * x);
    return 2.0 * std::log1p(-2.0 * s * s) + 2.0 * x * std::tan(x);
}

CriticalResult solve_critical_n(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("solve_critical_n: gamma must be > 0, got " + std::to_string(gamma));
    }
    const double gamma_max = critical_gamma(2.0);
    if (gamma > gamma_max) {
        throw std::domain_error("solve_critical_n: gamma = " + std::to_string(gamma) +
                                " exceeds critical_gamma(2) = " + std::to_string(gamma_max) +
                                "; no optimum with N >= 2");
    }

    CriticalResult r;
    r.gamma = gamma;
    r.asymptotic_estimate = asymptotic_critical_n(gamma);

    if (gamma == gamma_max) {
        r.n_real = 2.0;
    } else {
        const double lo = 2.0;
        const double hi = std::max(10.0, 10.0 * r.asymptotic_estimate);
        auto f = [gamma](double n) { return critical_gamma(n) - gamma; };
        std::uintmax_t max_iter = 200;
        boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 3);
        const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, max_iter);
        r.n_real = 0.5 * (a + b);
    }

    // scan a bracket around the continuous optimum, widening while the best
    // value sits on an edge
    int lo = std::max(2, static_cast<int>(std::floor(r.n_real)) - 2);
    int hi = static_cast<int>(std::ceil(r.n_real)) + 2;
    for (;;) {
        int best = lo;
        double best_log = log_p1(lo, gamma);
        for (int n = lo + 1; n <= hi; ++n) {
            const double v = log_p1(n, gamma);
            // strictly better by more than the tie tolerance, in probability
            if (std::exp(v) - std::exp(best_log) > kTieTolerance) {
                best = n;
                best_log = v;
            }
        }
        const bool at_low_edge = best == lo && lo > 2;
        const bool at_high_edge = best == hi;
        if (!at_low_edge && !at_high_edge) {
            r.n_int = best;
            r.p1_at_max = std::exp(best_log);
            break;
        }
        if (at_low_edge) lo = std::max(2, lo - 8);
        if (at_high_edge) hi += 8;
    }
    return r;
}

double asymptotic_critical_n(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("asymptotic_critical_n: gamma must be > 0");
    return std::numbers::pi / (2.0 * std::sqrt(gamma));
}

double printed_asymptotic_critical_n(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("printed_asymptotic_critical_n: gamma must be > 0");
    return 0.5 * std::sqrt(std::numbers::pi / gamma);
}

}  // namespace zeno
