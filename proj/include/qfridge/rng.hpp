// rng.hpp — SplitMix64 stream for reproducible parameter draws

#pragma once

#include <cstdint>

namespace qfridge::rng {

// Deterministic, platform-independent generator. Every draw index gets its own
// stream derived from (master seed, index) so parallel sampling is order-free.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  private:
    std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next_u64();
    return mix.next_u64();
}

} // namespace qfridge::rng
