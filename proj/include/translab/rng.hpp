#pragma once

#include <cstdint>
#include <random>

#include "translab/rational.hpp"

namespace translab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random stream. mt19937_64 is fully specified by the standard
// and the mappings below avoid the implementation-defined distributions, so
// sequences are identical across platforms and toolchains.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    // Independent substream for (seed, index); used by data-parallel checks so
    // the draw of trial k does not depend on scheduling.
    static RandomStream derived(std::uint64_t seed, std::uint64_t index) {
        return RandomStream(splitmix64(seed ^ splitmix64(index + 0x51ed2701)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0,1)
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform on [-1,1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    // uniform integer in [lo, hi], inclusive
    long long next_int(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(gen_() % span);
    }

    // uniform rational k / den with k in [lo*den, hi*den]
    Rational next_rational(long long lo, long long hi, long long den) {
        return rat(next_int(lo * den, hi * den), den);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace translab
