#include "ternary/random.hpp"

namespace ternary {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (index * 0x9E3779B97F4A7C15ULL));
    return mixer.next();
}

Scalar random_scalar(SplitMix64& rng, Field field) {
    const long num = rng.between(-9, 9);
    const long den = rng.between(1, 3);
    if (field == Field::rational) return Scalar(num, den);
    const long inum = rng.between(-9, 9);
    const long iden = rng.between(1, 3);
    return Scalar(mpq_class(num, den), mpq_class(inum, iden));
}

Vec random_vec(SplitMix64& rng, std::size_t size, Field field) {
    Vec v;
    v.reserve(size);
    for (std::size_t i = 0; i < size; ++i) v.push_back(random_scalar(rng, field));
    return v;
}

Vec random_sparse_vec(SplitMix64& rng, std::size_t size, Field field) {
    Vec v(size);
    bool any = false;
    for (std::size_t i = 0; i < size; ++i) {
        if (rng.coin()) {
            v[i] = random_scalar(rng, field);
            any = any || !v[i].is_zero();
        }
    }
    if (!any && size > 0) {
        // forced coordinate: index then a nonzero value in [1, 9]
        v[rng.below(size)] = Scalar(rng.between(1, 9));
    }
    return v;
}

Mat random_mat(SplitMix64& rng, std::size_t rows, std::size_t cols, Field field) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, field);
    }
    return m;
}

}  // namespace ternary
