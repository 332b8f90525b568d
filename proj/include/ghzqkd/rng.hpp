#pragma once

#include <cstdint>
#include <random>

namespace ghzqkd {

// Seeded generator injected into every stochastic operation. Draws avoid
// std::uniform_real_distribution and friends so that a (seed, call sequence)
// pair reproduces bit-for-bit on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Independent stream for parallel work: mixes (seed, stream) through
    // splitmix64 before seeding, so neighbouring stream ids decorrelate.
    static Rng substream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Number of successes in `shots` Bernoulli(p) draws.
    int binomial(int shots, double p) {
        int hits = 0;
        for (int i = 0; i < shots; ++i) hits += bernoulli(p) ? 1 : 0;
        return hits;
    }

    int bit() { return static_cast<int>(eng_() >> 63); }

  private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x51ed2701)));
}

}  // namespace ghzqkd
