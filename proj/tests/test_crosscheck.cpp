#include <gtest/gtest.h>

#include "curalg/qchar/crosscheck.hpp"

using namespace curalg;
using namespace curalg::qchar;

using Dims = std::vector<std::size_t>;

TEST(Crosscheck, TrivialCoefficients)
{
    // p = 0, energy 0: only the empty chain survives.
    EXPECT_EQ(filtered_relative_homology(0, 0, 0, 4), (Dims{1, 0, 0, 0, 0}));
    // g (x) x carries no invariants and its wedge powers leave energy 1.
    EXPECT_EQ(filtered_relative_homology(0, 1, 1, 4), (Dims{0, 0, 0, 0, 0}));
}

TEST(Crosscheck, OneCoefficientHandCount)
{
    // S = 1, weight (-1, 1): C_1 = g (x) x^-1 has no invariants, C_2 = (g (x) x^-2) ^ (g (x) x)
    // has the single Killing-form invariant, C_3 needs positive degree 2.
    EXPECT_EQ(filtered_relative_homology(1, 1, 1, 4), (Dims{0, 1, 0, 0, 0}));
}

TEST(Crosscheck, LateClassAtThreeCoefficients)
{
    // The H_3 class at p = 3, energy 0 needs filtration 6; lower levels agree with each other.
    for (int s = 3; s <= 5; ++s) EXPECT_EQ(filtered_relative_homology(3, 0, s, 4)[3], 0u) << s;
    EXPECT_EQ(filtered_relative_homology(3, 0, 6, 4)[3], 1u);
}

TEST(Crosscheck, SmallGridMatchesWeylSum)
{
    CrosscheckReport r = euler_crosscheck(2, 2);
    ASSERT_EQ(r.cells.size(), 9u);
    for (const auto& c : r.cells) EXPECT_TRUE(c.match) << "p=" << c.p << " w=" << c.w;
    // t^2 row of the Kac series over energies 0, 1, 2.
    EXPECT_EQ(r.cells[6].weyl_coefficient, 1);
    EXPECT_EQ(r.cells[7].weyl_coefficient, 0);
    EXPECT_EQ(r.cells[8].weyl_coefficient, 1);
    EXPECT_EQ(r.first_mismatch(), nullptr);
}
