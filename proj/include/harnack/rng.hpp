#pragma once

#include <cstdint>

namespace harnack {

/// splitmix64 (Steele/Lea/Vigna): fixed-increment 64-bit generator with a
/// bijective finalizer. Chosen because it is trivially portable (pure
/// integer arithmetic, identical on every platform) and because independent
/// substreams can be keyed by a 64-bit index, so serial and parallel runs
/// draw identical values for the same trial.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ull);
        return mix(x);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Independent generator for (seed, key); used one-per-trial.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t key) {
        return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ull * (key + 1ull)));
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

}  // namespace harnack
