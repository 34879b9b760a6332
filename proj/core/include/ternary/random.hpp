#ifndef TERNARY_RANDOM_HPP
#define TERNARY_RANDOM_HPP

#include <cstdint>

#include "ternary/matrix.hpp"

namespace ternary {

/// SplitMix64 (Steele, Lea, Flood 2014). 64-bit state; stream for trial k of
/// a campaign seeded with s is SplitMix64(derive_seed(s, k)). All draws in
/// this library go through next(), so reimplementations in other languages
/// reproduce the same values.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, bound): next() % bound. The modulo bias is below
    /// 2^-59 for the bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Integer in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

/// Seed of sub-stream `index` under `seed`: one SplitMix64 step from
/// seed ^ (index * golden-ratio constant).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Numerator uniform in [-9, 9], denominator uniform in {1, 2, 3}. In
/// Gaussian mode the real part is drawn first, then the imaginary part.
Scalar random_scalar(SplitMix64& rng, Field field);

/// Every coordinate drawn with random_scalar.
Vec random_vec(SplitMix64& rng, std::size_t size, Field field);

/// Each coordinate kept with probability 1/2 (one coin per coordinate,
/// drawn before the value); at least one nonzero coordinate is forced.
Vec random_sparse_vec(SplitMix64& rng, std::size_t size, Field field);

Mat random_mat(SplitMix64& rng, std::size_t rows, std::size_t cols, Field field);

}  // namespace ternary

#endif  // TERNARY_RANDOM_HPP
