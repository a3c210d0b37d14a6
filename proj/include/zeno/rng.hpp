#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace zeno {

/// Generator for one independent stream, keyed by (master seed, stream index).
/// The same key always yields the same sequence, regardless of which thread
/// or in which order the streams are drawn.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double on [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Documented default seed for reproducible out-of-the-box runs.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs body(begin, end) over [0, count) split into contiguous blocks on up
/// to `workers` threads. body must only write to slots it owns.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace zeno
