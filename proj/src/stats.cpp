#include "zeno/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace zeno {

EnsembleStats::EnsembleStats(std::size_t steps) : count_(steps, 0), mean_(steps, 0.0), m2_(steps, 0.0) {}

EnsembleStats EnsembleStats::from_counts(std::uint64_t total, std::span<const std::uint64_t> survivors) {
    EnsembleStats s(survivors.size());
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const std::uint64_t k = survivors[i];
        if (k > total) throw std::domain_error("EnsembleStats::from_counts: survivors exceed total");
        s.count_[i] = total;
        if (total == 0) continue;
        const double n = static_cast<double>(total);
        const double kd = static_cast<double>(k);
        s.mean_[i] = kd / n;
        s.m2_[i] = kd * (n - kd) / n;
    }
    return s;
}

void EnsembleStats::add(std::size_t step, double value) {
    auto& n = count_.at(step);
    ++n;
    const double delta = value - mean_[step];
    mean_[step] += delta / static_cast<double>(n);
    m2_[step] += delta * (value - mean_[step]);
}

void EnsembleStats::add_row(std::span<const double> values) {
    if (values.size() != steps()) throw std::domain_error("EnsembleStats::add_row: length mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) add(i, values[i]);
}

EnsembleStats& EnsembleStats::merge(const EnsembleStats& other) {
    if (other.steps() != steps()) throw std::domain_error("EnsembleStats::merge: step count mismatch");
    for (std::size_t i = 0; i < steps(); ++i) {
        const auto nb = other.count_[i];
        if (nb == 0) continue;
        const auto na = count_[i];
        if (na == 0) {
            count_[i] = nb;
            mean_[i] = other.mean_[i];
            m2_[i] = other.m2_[i];
            continue;
        }
        const double n = static_cast<double>(na + nb);
        const double wa = static_cast<double>(na);
        const double wb = static_cast<double>(nb);
        const double delta = other.mean_[i] - mean_[i];
        mean_[i] = (wa * mean_[i] + wb * other.mean_[i]) / n;
        m2_[i] += other.m2_[i] + delta * delta * wa * wb / n;
        count_[i] = na + nb;
    }
    return *this;
}

double EnsembleStats::variance(std::size_t step) const {
    const auto n = count_.at(step);
    if (n == 0) return 0.0;
    return std::max(0.0, m2_[step]) / static_cast<double>(n);
}

double EnsembleStats::standard_error(std::size_t step) const {
    const auto n = count_.at(step);
    if (n == 0) return 0.0;
    return std::sqrt(variance(step) / static_cast<double>(n));
}

}  // namespace zeno
