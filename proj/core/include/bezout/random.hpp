#pragma once

#include <cstdint>

namespace bezout {

/// SplitMix64 (Steele, Lea, Flood 2014). Fully specified so that instance
/// streams can be reproduced bit-for-bit in other implementations:
///
///     state += 0x9e3779b97f4a7c15
///     z = state
///     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///     return z ^ (z >> 31)
///
/// uniform(lo, hi) is lo + next() % (hi - lo + 1); chance(num, den) is
/// next() % den < num.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi]; requires lo <= hi.
    long uniform(long lo, long hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool chance(std::uint64_t num, std::uint64_t den) noexcept { return next() % den < num; }

    /// Derives an independent stream, e.g. one per test instance.
    SplitMix64 fork() noexcept { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

} // namespace bezout
