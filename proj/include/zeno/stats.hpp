#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zeno {

/// Per-step sample count, mean and second central moment (Welford/Chan).
/// Standard error is sqrt(m2 / n) / sqrt(n), which for 0/1 samples is
/// sqrt(p (1 - p) / n).
class EnsembleStats {
public:
    EnsembleStats() = default;
    explicit EnsembleStats(std::size_t steps);

    /// Exact statistics of 0/1 samples: survivors[i] ones out of `total` at step i.
    static EnsembleStats from_counts(std::uint64_t total, std::span<const std::uint64_t> survivors);

    std::size_t steps() const { return count_.size(); }

    void add(std::size_t step, double value);
    /// Adds one sample to every step.
    void add_row(std::span<const double> values);

    /// Pools two ensembles over the same steps.
    EnsembleStats& merge(const EnsembleStats& other);

    std::uint64_t count(std::size_t step) const { return count_.at(step); }
    double mean(std::size_t step) const { return mean_.at(step); }
    double variance(std::size_t step) const;
    double standard_error(std::size_t step) const;

private:
    std::vector<std::uint64_t> count_;
    std::vector<double> mean_;
    std::vector<double> m2_;
};

}  // namespace zeno
