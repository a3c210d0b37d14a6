#include "zeno/rng.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <thread>
#include <vector>

namespace zeno {

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    // one 64-bit key per (seed, index); the engine expands it to full state
    std::array<std::uint32_t, 2> key{};
    seq.generate(key.begin(), key.end());
    return std::mt19937_64((static_cast<std::uint64_t>(key[0]) << 32) | key[1]);
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t threads = std::clamp<std::size_t>(workers, 1, count);
    if (threads == 1) {
        body(0, count);
        return;
    }

    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::size_t block = (count + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t begin = t * block;
            const std::size_t end = std::min(count, begin + block);
            if (begin >= end) break;
            pool.emplace_back([&, t, begin, end] {
                try {
                    body(begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace zeno
