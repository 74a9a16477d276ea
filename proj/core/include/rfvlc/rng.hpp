#pragma once

#include <cstdint>
#include <random>

namespace rfvlc {

// splitmix64 step; used to derive statistically independent substream seeds
// from (master seed, stream index) so results do not depend on how trials are
// scheduled across workers.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a2a57df8695bULL;
    return z ^ (z >> 31);
}

// Engine for one Monte-Carlo trial. Identical (seed, trial_index) always
// yields the identical draw sequence.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t trial_index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = seed ^ (0x9e3779b97f4a7c15ULL + trial_index * 0xda942042e4dd58b5ULL);
    std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace rfvlc
