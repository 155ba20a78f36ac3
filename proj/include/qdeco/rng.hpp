#ifndef QDECO_RNG_HPP
#define QDECO_RNG_HPP

#include <cstdint>
#include <random>

namespace qdeco {

// All randomness in the project flows through this wrapper around
// std::mt19937_64. The raw 64-bit stream of mt19937_64 is specified by the
// C++ standard, and the derived draws below are implemented by hand, so a
// fixed seed reproduces byte-identical results on any platform. The standard
// distribution adaptors are deliberately not used (they are
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), bound >= 1. Unbiased via rejection sampling.
    int uniform_int(int bound) {
        const auto b = static_cast<std::uint64_t>(bound);
        const std::uint64_t threshold = (~std::uint64_t{0} % b + 1) % b; // 2^64 mod b
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return static_cast<int>(r % b);
        }
    }

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer; used to derive independent seeds for workers,
// subproblems and annealing reads from (seed, stream id) pairs.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace qdeco

#endif // QDECO_RNG_HPP
