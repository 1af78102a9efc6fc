#include "jcsc/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jcsc {

std::uint64_t RandomStream::uniform_int(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_int: n must be positive");
    }
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double RandomStream::gaussian(double mean, double stddev) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * std::numbers::pi * u2);
    return mean + stddev * z;
}

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view experiment_label,
                          std::uint64_t replication_index) {
    // FNV-1a over the label, then two splitmix rounds to fold in the master
    // seed and replication index.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : experiment_label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::uint64_t s = splitmix64(master_seed ^ h);
    s = splitmix64(s ^ replication_index);
    return s;
}

}  // namespace jcsc
