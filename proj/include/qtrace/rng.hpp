#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qtrace {

// All randomness flows through explicitly seeded engines. Sub-streams are
// derived by counter, never by sharing an engine, so results cannot depend
// on scheduling.
using Engine = std::mt19937_64;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// stream'th output of the splitmix64 sequence seeded at base.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return splitmix64(base + stream * kGolden);
}

inline Engine make_engine(std::uint64_t base, std::uint64_t stream = 0) {
    return Engine(derive_seed(base, stream));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound). Lemire's multiply-shift with rejection.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        const std::uint64_t cutoff = 0 - bound;
        const std::uint64_t t = cutoff % bound;
        while (lo < t) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, Engine& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// First `count` elements of a uniform permutation of {0, ..., n-1}.
inline std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t count,
                                                             Engine& rng) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < count && i + 1 < n; ++i) {
        const auto j = i + static_cast<std::uint32_t>(uniform_below(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace qtrace
