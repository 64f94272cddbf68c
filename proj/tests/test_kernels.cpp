#include "gen.hpp"
#include "oracle.hpp"

#include "gradix/kernels.hpp"

#include <gtest/gtest.h>

using namespace gradix;

TEST(Kernels, SerialAndParallelProductsAgree)
{
    gen::Rng rng(31);
    for (const auto& R : gen::rank_rings())
        for (int t = 0; t < 20; ++t) {
            int m = gen::uniform(rng, 1, 12), k = gen::uniform(rng, 1, 12), n = gen::uniform(rng, 1, 12);
            auto A = gen::random_matrix(R.D, m, k, rng);
            auto B = gen::random_matrix_rows(R.D, A.beta(), n, rng);
            auto s = kernels::hom_mul_serial(A, B);
            EXPECT_EQ(s, kernels::hom_mul_parallel(A, B)) << R.name;
            EXPECT_EQ(s, kernels::hom_mul(A, B));
            EXPECT_EQ(s, A * B);
        }
}

TEST(Kernels, IdentityProductIsIdentityByOracle)
{
    gen::Rng rng(32);
    for (const auto& R : gen::rank_rings()) {
        auto A = gen::random_matrix(R.D, 6, 6, rng);
        auto I = HomSpaceMatrix::identity(R.D, A.alpha());
        EXPECT_TRUE(oracle::product_is_identity(I, kernels::hom_mul_parallel(I, I)));
    }
}

TEST(Kernels, MinorRankMatchesOracle)
{
    gen::Rng rng(33);
    for (const auto& R : gen::rank_rings())
        for (int t = 0; t < 25; ++t) {
            auto A = gen::random_matrix_mixed(R.D, gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 5), rng);
            int k = oracle::minor_rank(A);
            EXPECT_EQ(kernels::minor_rank_serial(A), k) << R.name;
            EXPECT_EQ(kernels::minor_rank_parallel(A), k) << R.name;
        }
}

TEST(Kernels, Subsets)
{
    auto s = kernels::subsets(4, 2);
    ASSERT_EQ(s.size(), 6u);
    EXPECT_EQ(s.front(), (std::vector<int>{0, 1}));
    EXPECT_EQ(s.back(), (std::vector<int>{2, 3}));
    EXPECT_EQ(kernels::subsets(3, 0).size(), 1u);
    EXPECT_TRUE(kernels::subsets(2, 3).empty());
}
