#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "ternary/errors.hpp"

using namespace ternary;

namespace {

std::size_t block_formula(const NestSpec& spec) {
    const auto b = spec.block_sizes();
    std::size_t d = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) d += b[i] * b[j];
    }
    return d;
}

std::vector<std::vector<std::size_t>> all_nests(std::size_t max_n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
            std::vector<std::size_t> dims;
            for (std::size_t k = 1; k < n; ++k) {
                if (mask >> (k - 1) & 1) dims.push_back(k);
            }
            dims.push_back(n);
            out.push_back(dims);
        }
    }
    return out;
}

}  // namespace

TEST(NestSpec, Validation) {
    EXPECT_THROW(NestSpec({2, 1}), InputError);
    EXPECT_THROW(NestSpec({1, 1, 2}), InputError);
    EXPECT_THROW(NestSpec({1}), InputError);
    EXPECT_THROW(NestSpec(std::vector<std::size_t>{}), InputError);
    EXPECT_THROW(NestSpec::parse("1,,2"), InputError);
    EXPECT_THROW(NestSpec::parse("a"), InputError);
    EXPECT_EQ(NestSpec::parse("1,2,4").dims(), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(NestSpec::parse("1,2,4").str(), "1,2,4");
}

TEST(NestAlgebra, Dimensions) {
    EXPECT_EQ(NestAlgebra(NestSpec({2})).dim(), 4u);
    EXPECT_EQ(NestAlgebra(NestSpec({1, 2})).dim(), 3u);
    EXPECT_EQ(NestAlgebra(NestSpec({1, 2, 4})).dim(), 11u);
    for (const auto& dims : all_nests(6)) {
        const NestAlgebra nest{NestSpec(dims)};
        EXPECT_EQ(nest.dim(), block_formula(nest.spec()));
        EXPECT_EQ(nest.positions(), oracle::positions(dims));
    }
}

TEST(NestAlgebra, PatternClosureAndDiagonal) {
    for (const auto& dims : all_nests(6)) {
        const NestAlgebra nest{NestSpec(dims)};
        for (std::size_t p = 0; p < nest.n(); ++p) EXPECT_TRUE(nest.allowed(p, p));
        for (const auto& [p, q] : nest.positions()) {
            for (const auto& [q2, r] : nest.positions()) {
                if (q == q2) {
                    EXPECT_TRUE(nest.allowed(p, r));
                }
            }
        }
    }
}

TEST(NestAlgebra, StructureConstantsMatchDenseProducts) {
    for (const auto& dims : oracle::tested_nests()) {
        const NestAlgebra nest{NestSpec(dims)};
        const oracle::Dense dense(dims);
        const auto& alg = nest.algebra();
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                EXPECT_EQ(alg.multiply(alg.unit(i), alg.unit(j)), dense.vec(oracle::Dense::mul(dense.unit(i), dense.unit(j))));
            }
        }
        EXPECT_EQ(alg.unity(), dense.vec(dense.identity()));
        EXPECT_TRUE(alg.is_associative());
        EXPECT_TRUE(alg.is_unital());
    }
}

TEST(NestAlgebra, LabelsAndMembership) {
    const NestAlgebra nest{NestSpec({1, 2})};
    EXPECT_EQ(nest.algebra().labels(), (std::vector<std::string>{"E11", "E12", "E22"}));
    EXPECT_THROW(nest.unit(1, 0), MembershipError);
    Mat low(2, 2);
    low(1, 0) = Scalar(1);
    EXPECT_THROW(nest.from_dense(low), MembershipError);
    EXPECT_THROW(mult_rep(Side::left, low, nest), MembershipError);
}

TEST(MultRep, Examples) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const std::size_t d = nest.dim();
    EXPECT_EQ(mult_rep(Side::left, Mat::identity(2), nest), Mat::identity(d));
    EXPECT_EQ(mult_rep(Side::right, Mat::identity(2), nest), Mat::identity(d));
    EXPECT_TRUE(mult_rep(Side::left, Mat(2, 2), nest).is_zero());

    // L_{E12}: E22 -> E12, everything else -> 0
    Mat e12(2, 2);
    e12(0, 1) = Scalar(1);
    Mat expected(d, d);
    expected(*nest.slot(0, 1), *nest.slot(1, 1)) = Scalar(1);
    EXPECT_EQ(mult_rep(Side::left, e12, nest), expected);
}

TEST(MultRep, HomomorphismLaws) {
    SplitMix64 rng(3);
    for (const auto& dims : oracle::tested_nests()) {
        const NestAlgebra nest{NestSpec(dims)};
        const oracle::Dense dense(dims);
        const auto& alg = nest.algebra();
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                const Mat a = dense.unit(i);
                const Mat b = dense.unit(j);
                const Mat ab = oracle::Dense::mul(a, b);
                EXPECT_EQ(mult_rep(Side::left, a, nest) * mult_rep(Side::left, b, nest), mult_rep(Side::left, ab, nest));
                EXPECT_EQ(mult_rep(Side::right, a, nest) * mult_rep(Side::right, b, nest), mult_rep(Side::right, oracle::Dense::mul(b, a), nest));
            }
        }
        const Vec x = random_vec(rng, alg.dim(), Field::gaussian);
        EXPECT_EQ(mult_rep(Side::left, dense.mat(x), nest), alg.left_rep(x));
        EXPECT_EQ(mult_rep(Side::right, dense.mat(x), nest), alg.right_rep(x));
    }
}

TEST(Idempotents, ExampleOneTwo) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const auto family = nest.idempotent_generators();
    const oracle::Dense dense({1, 2});
    auto has = [&](const Mat& m) {
        const Vec v = dense.vec(m);
        return std::find(family.begin(), family.end(), v) != family.end();
    };
    Mat e11 = dense.unit(0), e22 = dense.unit(2), e11e12 = oracle::Dense::add(dense.unit(0), dense.unit(1));
    EXPECT_TRUE(has(e11));
    EXPECT_TRUE(has(e22));
    EXPECT_TRUE(has(e11e12));
    EXPECT_TRUE(has(dense.identity()));
    EXPECT_EQ(oracle::rank(Mat::from_columns(family, nest.dim())), 3u);
}

TEST(Idempotents, SpanAndIdempotenceUpToEight) {
    for (const auto& dims : all_nests(8)) {
        if (dims.back() > 6 && dims.size() > 3) continue;
        const NestAlgebra nest{NestSpec(dims)};
        const oracle::Dense dense(dims);
        const auto family = nest.idempotent_generators();
        for (const auto& p : family) {
            const Mat m = dense.mat(p);
            ASSERT_EQ(oracle::Dense::mul(m, m), m);
        }
        for (std::size_t i = 0; i < dims.size(); ++i) {
            Mat q(dense.n(), dense.n());
            for (std::size_t k = 0; k < dims[i]; ++k) q(k, k) = Scalar(1);
            EXPECT_NE(std::find(family.begin(), family.end(), dense.vec(q)), family.end());
        }
        EXPECT_EQ(oracle::rank(Mat::from_columns(family, nest.dim())), nest.dim()) << NestSpec(dims).str();
    }
}

TEST(Idempotents, FullMatrixAlgebraHasBothOffDiagonalForms) {
    const NestAlgebra nest{NestSpec({2})};
    const oracle::Dense dense({2});
    const auto family = nest.idempotent_generators();
    Mat a(2, 2);
    a(0, 0) = a(0, 1) = Scalar(1);  // E11 + E12
    Mat b(2, 2);
    b(1, 1) = b(1, 0) = Scalar(1);  // E22 + E21
    EXPECT_NE(std::find(family.begin(), family.end(), dense.vec(a)), family.end());
    EXPECT_NE(std::find(family.begin(), family.end(), dense.vec(b)), family.end());
    EXPECT_EQ(oracle::rank(Mat::from_columns(family, 4)), 4u);
}

TEST(Center, ScalarsOnly) {
    for (const auto& dims : all_nests(6)) {
        const NestAlgebra nest{NestSpec(dims)};
        const auto& alg = nest.algebra();
        const auto c = nest.center();
        ASSERT_EQ(c.size(), 1u);
        // c[0] is a multiple of I
        EXPECT_EQ(oracle::rank(Mat::from_columns({c[0], alg.unity()}, alg.dim())), 1u);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            EXPECT_EQ(alg.multiply(c[0], alg.unit(i)), alg.multiply(alg.unit(i), c[0]));
        }
    }
}

TEST(Faithful, NoNonzeroElementKillsAllUnits) {
    for (const auto& dims : oracle::tested_nests()) {
        const NestAlgebra nest{NestSpec(dims)};
        const auto& alg = nest.algebra();
        const std::size_t d = alg.dim();
        // stack e_i X over i (and X e_i) as one d^2 x d system
        Mat left(d * d, d), right(d * d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const Mat l = alg.right_rep(alg.unit(i));  // X -> X e_i
            const Mat r = alg.left_rep(alg.unit(i));   // X -> e_i X
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t c = 0; c < d; ++c) {
                    left(i * d + k, c) = l(k, c);
                    right(i * d + k, c) = r(k, c);
                }
            }
        }
        EXPECT_TRUE(nullspace(left).empty());
        EXPECT_TRUE(nullspace(right).empty());
    }
}

TEST(Annihilator, Examples) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const auto& alg = nest.algebra();
    EXPECT_TRUE(nest.right_annihilator(alg.unity()).empty());
    EXPECT_EQ(nest.right_annihilator(alg.zero()).size(), 3u);
    const auto ann = nest.right_annihilator(nest.unit(0, 0));
    ASSERT_EQ(ann.size(), 1u);
    EXPECT_EQ(oracle::rank(Mat::from_columns({ann[0], nest.unit(1, 1)}, 3)), 1u);
}

TEST(Annihilator, DimensionIsCorank) {
    SplitMix64 rng(17);
    for (const auto& dims : oracle::tested_nests()) {
        const NestAlgebra nest{NestSpec(dims)};
        const oracle::Dense dense(dims);
        const auto& alg = nest.algebra();
        for (int k = 0; k < 10; ++k) {
            const Vec a = random_sparse_vec(rng, alg.dim(), Field::rational);
            const auto ann = nest.right_annihilator(a);
            EXPECT_EQ(ann.size(), alg.dim() - oracle::rank(alg.left_rep(a)));
            for (const auto& b : ann) EXPECT_TRUE(oracle::Dense::zero(oracle::Dense::mul(dense.mat(a), dense.mat(b))));
        }
    }
}

TEST(ZeroProductPairs, SoundAndDeterministic) {
    for (const auto& dims : oracle::tested_nests()) {
        const NestAlgebra nest{NestSpec(dims)};
        const oracle::Dense dense(dims);
        const auto pairs = sample_zero_product_pairs(nest, 20, 9);
        for (const auto& [a, b] : pairs) {
            ASSERT_TRUE(oracle::Dense::zero(oracle::Dense::mul(dense.mat(a), dense.mat(b))));
        }
        const auto again = sample_zero_product_pairs(nest, 20, 9);
        ASSERT_EQ(pairs.size(), again.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            EXPECT_EQ(pairs[i].a, again[i].a);
            EXPECT_EQ(pairs[i].b, again[i].b);
        }
    }
    EXPECT_THROW(sample_zero_product_pairs(NestAlgebra(NestSpec({1, 2})), 0, 1), InputError);
}

TEST(ZeroProductPairs, ContainsCanonicalFamily) {
    const NestAlgebra nest{NestSpec({1, 2})};
    const auto& alg = nest.algebra();
    const auto pairs = sample_zero_product_pairs(nest, 1, 1);
    auto contains = [&](const Vec& a, const Vec& b) {
        return std::any_of(pairs.begin(), pairs.end(), [&](const WitnessPair& p) { return p.a == a && p.b == b; });
    };
    const Vec e12 = nest.unit(0, 1), e22 = nest.unit(1, 1);
    EXPECT_TRUE(contains(e12, e12));
    EXPECT_FALSE(contains(e12, e22));
    for (const auto& p : nest.idempotent_generators()) {
        const Vec q = alg.unity() - p;
        for (std::size_t x = 0; x < alg.dim(); ++x) {
            for (std::size_t y = 0; y < alg.dim(); ++y) {
                const Vec a = alg.multiply(alg.unit(x), p);
                const Vec b = alg.multiply(q, alg.unit(y));
                if (is_zero(a) || is_zero(b)) continue;
                EXPECT_TRUE(contains(a, b));
            }
        }
    }
}
