#ifndef JCSC_RNG_HPP
#define JCSC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace jcsc {

// Deterministic random stream. All conversions from raw engine output are
// done explicitly so results depend only on the seed, never on library
// distribution internals.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t n);

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard Box-Muller; always consumes exactly two draws.
    double gaussian(double mean, double stddev);

private:
    std::mt19937_64 engine_;
};

// Stable seed derivation for one experiment stream. Same inputs always give
// the same seed; distinct replication indices give distinct seeds.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view experiment_label,
                          std::uint64_t replication_index);

}  // namespace jcsc

#endif  // JCSC_RNG_HPP
