#include <gtest/gtest.h>

#include "curalg/derham/cyclic.hpp"
#include "curalg/graded/dsl.hpp"

using namespace curalg;

namespace {

GradedAlgebra ground_field() { return free_skew_algebra({}, WeightWindow{{}, {0}}); }
GradedAlgebra polynomial() { return parse_algebra_spec("free x:w=1", 6); }
GradedAlgebra x_xi() { return parse_algebra_spec("free x:w=1, xi:odd:w=1", 6); }

WeightWindow upto(int w) { return WeightWindow{{0}, {w}}; }

} // namespace

TEST(DeRham, GroundField)
{
    DeRhamComplex c = de_rham(ground_field());
    auto b = c.slice_bases({0});
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b.at(0).size(), 1u);
}

TEST(DeRham, LeibnizOnPolynomials)
{
    DeRhamComplex c = de_rham(polynomial());
    Poly x2{{Exponents{2, 0}, Rational(1)}};
    EXPECT_EQ(c.apply_d(x2), (Poly{{Exponents{1, 1}, Rational(2)}}));
    // dx is odd, so (dx)^2 never appears
    for (const auto& [t, basis] : c.slice_bases({3}))
        for (const auto& e : basis) EXPECT_LE(e[1], 1);
}

TEST(DeRham, OddGeneratorHasEvenDifferential)
{
    DeRhamComplex c = de_rham(x_xi());
    bool found = false;
    for (const auto& [t, basis] : c.slice_bases({3}))
        for (const auto& e : basis)
            if (e == Exponents{0, 0, 0, 3}) {
                found = true;
                EXPECT_EQ(c.form_degree(e), 3);
                EXPECT_EQ(c.total_degree(e), 0);
            }
    EXPECT_TRUE(found);
}

TEST(DeRham, DifferentialsSquareToZero)
{
    DeRhamComplex c = de_rham(resolve_quotient(2));
    for (int w = 0; w <= 6; ++w) EXPECT_TRUE(c.check_invariants({w})) << w;
    DeRhamComplex k = de_rham(parse_algebra_spec("free x:w=1, y:w=1, e:odd:w=2; d e = x*y - 3*y^2"));
    for (int w = 0; w <= 5; ++w) EXPECT_TRUE(k.check_invariants({w})) << w;
    for (int i = 0; i <= 2; ++i) EXPECT_TRUE(truncate_forms(k, i).check_invariants({4}));
}

TEST(DeRham, NonFreeInputRejected)
{
    EXPECT_THROW(de_rham(quotient_truncated_poly(3)), Error);
}

TEST(DeRham, Truncation)
{
    DeRhamComplex c = de_rham(polynomial());
    // i = 0 keeps only functions; i = 1 is the two-term complex A -> A dx
    for (const auto& [t, basis] : truncate_forms(c, 0).slice_bases({2})) {
        EXPECT_EQ(t, 0);
        EXPECT_EQ(basis.size(), 1u);
    }
    auto one = truncate_forms(c, 1).slice_bases({2});
    EXPECT_EQ(one.size(), 2u);
    EXPECT_EQ(one.at(1).size(), 1u);
    // large i changes nothing
    EXPECT_EQ(truncate_forms(c, 5).slice_bases({3}), c.slice_bases({3}));
}

TEST(CyclicHomology, GroundField)
{
    HCTable t = cyclic_homology(ground_field(), 4, 0, 10, upto(0));
    for (int i = 0; i <= 4; ++i)
        for (int n = 0; n <= 10; ++n) EXPECT_EQ(t.dim(n, i, {0}), n == 2 * i ? 1u : 0u) << n << "," << i;
}

TEST(CyclicHomology, PolynomialRingTable)
{
    HCTable t = cyclic_homology(polynomial(), 3, 0, 8, upto(5));
    // row 0 is A itself; rows i >= 1 hold only H^0(A) = C at n = 2i
    for (int w = 0; w <= 5; ++w) EXPECT_EQ(t.dim(0, 0, {w}), 1u);
    EXPECT_EQ(t.total(1, 1), 0u);
    EXPECT_EQ(t.dim(2, 1, {0}), 1u);
    for (int i = 1; i <= 3; ++i)
        for (int n = 0; n <= 8; ++n) EXPECT_EQ(t.total(n, i), n == 2 * i ? 1u : 0u) << n << "," << i;
    EXPECT_TRUE(t.all_trusted());
}

TEST(CyclicHomology, FreeOddVariable)
{
    // C[x] xi (dxi)^i contributes one class in each weight >= i + 1 at n = 2i + 1
    HCTable t = cyclic_homology(x_xi(), 3, 0, 8, upto(6));
    for (int i = 0; i <= 3; ++i)
        for (int w = 0; w <= 6; ++w) EXPECT_EQ(t.dim(2 * i + 1, i, {w}), w >= i + 1 ? 1u : 0u) << i << "," << w;
}

TEST(CyclicHomology, ResolutionComputesQuotient)
{
    for (int m : {1, 2, 3}) {
        // i = 0 slice of the de Rham complex is (A, delta); its homology is C[x]/(x^m) in degree 0
        HCTable t = cyclic_homology(*resolve_quotient(m).free_model, "res", 0, 0, 3, upto(3 * m));
        for (int w = 0; w <= 3 * m; ++w) {
            EXPECT_EQ(t.dim(0, 0, {w}), w < m ? 1u : 0u);
            for (int n = 1; n <= 3; ++n) EXPECT_EQ(t.dim(n, 0, {w}), 0u);
        }
    }
}

TEST(CyclicHomology, TruncatedPolynomialQuotient)
{
    for (int m : {2, 3}) {
        GradedAlgebra a = quotient_truncated_poly(m);
        HCTable small = cyclic_homology(a, 3, 0, 8, upto(4 * m));
        HCTable large = cyclic_homology(a, 3, 0, 8, upto(4 * m + 3));
        for (const auto& e : small.entries) EXPECT_EQ(e.dim, large.dim(e.n, e.i, e.weight));
        for (int i = 1; i <= 3; ++i)
            for (int n = 0; n <= 8; ++n) {
                std::size_t positive = 0;
                for (int w = 1; w <= 4 * m; ++w) positive += small.dim(n, i, {w});
                EXPECT_EQ(positive, n == 2 * i ? std::size_t(m - 1) : 0u) << "m=" << m << " n=" << n << " i=" << i;
                if (n == 2 * i)
                    for (int w = m * i + 1; w < m * (i + 1); ++w) EXPECT_EQ(small.dim(n, i, {w}), 1u);
            }
    }
}

TEST(CyclicHomology, CrossingLinesUsesResolution)
{
    HCTable t = cyclic_homology(crossing_lines(4), 1, 0, 2, WeightWindow{{0, 0}, {2, 2}});
    // HC_0 = A: one basis element per weight on the axes, none off them
    EXPECT_EQ(t.dim(0, 0, {1, 1}), 0u);
    EXPECT_EQ(t.dim(0, 0, {2, 0}), 1u);
    EXPECT_THROW(cyclic_homology(laurent_window(2), 1, upto(1)), Error);
}

TEST(Periodicity, GroundField)
{
    auto r = periodicity_S(FreeModel{}, 1, 2, {0});
    EXPECT_EQ(r.source_dim, 1u);
    EXPECT_EQ(r.target_dim, 1u);
    EXPECT_EQ(r.rank, 1u);
}

TEST(Periodicity, ZeroSource)
{
    auto r = periodicity_S(*polynomial().free_model, 1, 1, {0});
    EXPECT_EQ(r.source_dim, 0u);
    EXPECT_EQ(r.rank, 0u);
}

TEST(Periodicity, TruncatedPolynomialQuotient)
{
    // S : HC_4^(2) -> HC_2^(1) for C[x]/(x^2): rank 1 on constants, 0 in positive weight
    const FreeModel res = *resolve_quotient(2).free_model;
    std::size_t positive = 0;
    for (int w = 1; w <= 8; ++w) positive += periodicity_S(res, 2, 4, {w}).rank;
    EXPECT_EQ(periodicity_S(res, 2, 4, {0}).rank, 1u);
    EXPECT_EQ(positive, 0u);
    EXPECT_EQ(periodicity_S(res, 2, 4, {5}).source_dim, 1u);
    EXPECT_EQ(periodicity_S(res, 2, 4, {3}).target_dim, 1u);
}
