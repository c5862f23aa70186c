#include <gtest/gtest.h>

#include <random>

#include "curalg/exact/elimination.hpp"
#include "curalg/exact/laurent.hpp"
#include "curalg/exact/series.hpp"
#include "oracles.hpp"

using namespace curalg;

namespace {

void expect_kernel_valid(const SparseMatQ& m, const RankKernel& rk)
{
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), static_cast<std::size_t>(m.cols()));
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE(m.apply(v).empty());
    // independence: the kernel matrix has full column rank
    EXPECT_EQ(rank(SparseMatQ::from_columns(m.cols(), rk.kernel_basis)), rk.kernel_basis.size());
}

} // namespace

TEST(Rational, CanonicalForm)
{
    Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
}

TEST(SparseMatrix, RejectsDuplicatesAndOutOfRange)
{
    EXPECT_THROW(SparseMatQ(2, 2, {{0, 0, 1}, {0, 0, 2}}), DimensionError);
    EXPECT_THROW(SparseMatQ(2, 2, {{2, 0, 1}}), DimensionError);
    SparseMatQ m(2, 2, {{0, 0, 0}, {1, 1, 3}});
    EXPECT_EQ(m.nonzeros(), 1u);
}

TEST(RankKernel, Identity)
{
    auto rk = rank_kernel(SparseMatQ::identity(3));
    EXPECT_EQ(rk.rank, 3u);
    EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(RankKernel, ProportionalRows)
{
    auto m = SparseMatQ::from_dense({{1, 2}, {2, 4}});
    auto rk = rank_kernel(m);
    EXPECT_EQ(rk.rank, 1u);
    ASSERT_EQ(rk.kernel_basis.size(), 1u);
    const auto& k = rk.kernel_basis[0];
    // proportional to (2, -1)
    EXPECT_EQ(sparse_at(k, 0) * -1, sparse_at(k, 1) * 2);
    expect_kernel_valid(m, rk);
}

TEST(RankKernel, EmptyMatrix)
{
    EXPECT_EQ(rank(SparseMatQ(0, 0, {})), 0u);
    auto rk = rank_kernel(SparseMatQ(0, 3, {}));
    EXPECT_EQ(rk.kernel_basis.size(), 3u);
}

TEST(RankKernel, RandomSparseAgainstBareiss)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        auto d = oracle::random_int_matrix(rng, 30, 40, 2, 0.15);
        auto m = oracle::to_sparse(d);
        auto rk = rank_kernel(m);
        EXPECT_EQ(rk.rank, oracle::bareiss_rank(d)) << "trial " << trial;
        expect_kernel_valid(m, rk);
    }
}

TEST(RankKernel, SmallDenseAgainstBareissAndTranspose)
{
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        int r = dim(rng), c = dim(rng);
        auto d = oracle::random_int_matrix(rng, r, c, 3, trial % 2 ? 0.8 : 0.3);
        auto m = oracle::to_sparse(d);
        auto expected = oracle::bareiss_rank(d);
        EXPECT_EQ(rank_kernel(m).rank, expected);
        EXPECT_EQ(rank(m), expected);
        EXPECT_EQ(rank(m.transpose()), expected);
    }
}

TEST(RankKernel, LowRankProducts)
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = oracle::to_sparse(oracle::random_int_matrix(rng, 15, 4, 3, 0.9));
        auto b = oracle::to_sparse(oracle::random_int_matrix(rng, 4, 18, 3, 0.9));
        auto m = a * b;
        EXPECT_LE(rank(m), 4u);
        expect_kernel_valid(m, rank_kernel(m));
    }
}

TEST(Membership, IdentityWitness)
{
    SparseVec v{{0, 3}, {2, make_rational(-1, 2)}};
    auto r = solve_membership(SparseMatQ::identity(3), v);
    ASSERT_TRUE(r.in_image);
    EXPECT_EQ(*r.witness, v);
}

TEST(Membership, ZeroMatrixCertificate)
{
    SparseMatQ z(3, 2, {});
    SparseVec v{{1, 5}};
    auto r = solve_membership(z, v);
    EXPECT_FALSE(r.in_image);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(z.apply_left(*r.certificate).empty());
    EXPECT_NE(sparse_dot(*r.certificate, v), 0);
}

TEST(Membership, DimensionMismatch)
{
    EXPECT_THROW(solve_membership(SparseMatQ::identity(2), SparseVec{{5, 1}}), DimensionError);
}

TEST(Membership, RandomConsistentSystems)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = oracle::to_sparse(oracle::random_int_matrix(rng, 20, 14, 2, 0.25));
        SparseVec x;
        for (int j = 0; j < 14; ++j)
            if (int c = val(rng)) x.emplace_back(j, c);
        SparseVec v = m.apply(x);
        auto r = solve_membership(m, v);
        ASSERT_TRUE(r.in_image);
        EXPECT_TRUE(sparse_add(m.apply(*r.witness), v, -1).empty());
    }
}

TEST(Membership, RandomInconsistentHasCertificate)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = oracle::to_sparse(oracle::random_int_matrix(rng, 12, 5, 2, 0.5));
        SparseVec v;
        for (int i = 0; i < 12; ++i) v.emplace_back(i, i * i + trial + 1);
        auto r = solve_membership(m, v);
        if (r.in_image) {
            EXPECT_TRUE(sparse_add(m.apply(*r.witness), v, -1).empty());
        } else {
            ASSERT_TRUE(r.certificate);
            EXPECT_TRUE(m.apply_left(*r.certificate).empty());
            EXPECT_NE(sparse_dot(*r.certificate, v), 0);
        }
    }
}

// ---------------------------------------------------------------------------

TEST(UFrac, NormalizesCommonFactors)
{
    // (u^2 - 1) / (u - 1) = u + 1
    ULaurent num = ULaurent::monomial(2) - ULaurent(Rational(1));
    ULaurent den = ULaurent::monomial(1) - ULaurent(Rational(1));
    UFrac f(num, den);
    EXPECT_TRUE(f.is_polynomial());
    EXPECT_EQ(f, UFrac(ULaurent::monomial(1) + ULaurent(Rational(1))));
}

TEST(UFrac, NegativePowersInDenominatorMoveToNumerator)
{
    // 1 / (1 - u^-2) = u^2 / (u^2 - 1)
    UFrac f(ULaurent(Rational(1)), ULaurent(Rational(1)) - ULaurent::monomial(-2));
    EXPECT_EQ(f.denominator(), ULaurent::monomial(2) - ULaurent(Rational(1)));
    EXPECT_EQ(f.numerator(), ULaurent::monomial(2));
}

TEST(UFrac, InverseProperty)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> val(-3, 3), ex(-3, 3);
    auto random_laurent = [&] {
        ULaurent p;
        for (int k = 0; k < 3; ++k) p.add_term(ex(rng), val(rng));
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        ULaurent a = random_laurent(), b = random_laurent();
        if (a.is_zero() || b.is_zero()) continue;
        UFrac f(a, b);
        EXPECT_EQ(f * f.inverse(), UFrac(Rational(1)));
        EXPECT_TRUE(UFrac::equal_by_cross_multiplication(f + f.inverse(), f.inverse() + f));
        EXPECT_EQ((f + f) - f, f);
    }
    EXPECT_THROW(UFrac().inverse(), NotInvertibleError);
}

// ---------------------------------------------------------------------------

namespace {

QTSeries one_minus_tq(int n_t)
{
    QTSeries s = QTSeries::constant(Rational(1), n_t);
    s.add_term(1, 1, Rational(-1));
    return s;
}

QTSeries random_series(std::mt19937& rng, int n_t, int n_q)
{
    std::uniform_int_distribution<int> val(-2, 2), q(-1, n_q), t(0, n_t), u(-2, 2);
    QTSeries s(n_t, n_q);
    for (int k = 0; k < 8; ++k) {
        ULaurent c;
        c.add_term(u(rng), val(rng));
        c.add_term(u(rng), val(rng));
        s.add_term(q(rng), t(rng), UFrac(c));
    }
    return s;
}

} // namespace

TEST(Series, AddZero)
{
    std::mt19937 rng(1);
    auto a = random_series(rng, 3, 6);
    EXPECT_EQ(series_arith(a, QTSeries(3, 6), SeriesOp::Add), a);
}

TEST(Series, GeometricInverse)
{
    const int n_t = 5, n_q = 7;
    QTSeries inv = series_arith(one_minus_tq(n_t), QTSeries(n_t, n_q), SeriesOp::InvertUnit);
    EXPECT_EQ(inv.n_q(), n_q);
    QTSeries expected(n_t, n_q);
    for (int k = 0; k <= n_t; ++k) expected.add_term(k, k, Rational(1));
    EXPECT_EQ(inv, expected);
    QTSeries prod = one_minus_tq(n_t) * inv;
    EXPECT_EQ(prod, QTSeries::constant(Rational(1), n_t, n_q));
}

TEST(Series, InverseWithNegativeQInTerms)
{
    // 1 - t q^-1 : inverse is sum t^k q^-k
    const int n_t = 4;
    QTSeries a = QTSeries::constant(Rational(1), n_t);
    a.add_term(-1, 1, Rational(-1));
    QTSeries inv = a.invert_unit(3);
    for (int k = 0; k <= n_t; ++k) EXPECT_EQ(inv.coeff(-k, k), UFrac(Rational(1)));
    QTSeries prod = a * inv;
    EXPECT_EQ(prod.n_q(), 2);
    EXPECT_EQ(prod, QTSeries::constant(Rational(1), n_t, 2));
}

TEST(Series, InverseWithUFracLeadingTerm)
{
    // (1 - u^-2) - q u^2, a unit whose leading coefficient is not a constant
    const int n_t = 2, n_q = 6;
    QTSeries a = QTSeries::constant(UFrac(ULaurent(Rational(1)) - ULaurent::monomial(-2)), n_t);
    a.add_term(1, 0, UFrac(ULaurent::monomial(2, -1)));
    QTSeries inv = a.invert_unit(n_q);
    EXPECT_EQ(a * inv, QTSeries::constant(Rational(1), n_t, n_q));
}

TEST(Series, InexactInverseTracksPrecision)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        QTSeries a = random_series(rng, 3, 8);
        a.add_term(-1, 0, Rational(1));
        if (a.coeff(-1, 0).is_zero()) continue;
        // lowest t^0 term is at q^-1 unless the random part went lower
        try {
            QTSeries inv = a.invert_unit();
            QTSeries prod = a * inv;
            EXPECT_GE(prod.n_q(), 0);
            EXPECT_EQ(prod, QTSeries::constant(Rational(1), 3, prod.n_q()));
        } catch (const HeadroomError&) {
        }
    }
}

TEST(Series, NotInvertible)
{
    QTSeries a = QTSeries::monomial(0, 1, Rational(1), 3);
    EXPECT_THROW(a.invert_unit(5), NotInvertibleError);
}

TEST(Series, MultiplicationRingAxioms)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_series(rng, 3, 6), b = random_series(rng, 3, 6), c = random_series(rng, 3, 6);
        EXPECT_EQ(a * b, b * a);
        auto l = (a * b) * c, r = a * (b * c);
        int n = std::min(l.n_q(), r.n_q());
        EXPECT_EQ(l.truncated(n), r.truncated(n));
        auto d1 = a * (b + c), d2 = a * b + a * c;
        n = std::min(d1.n_q(), d2.n_q());
        EXPECT_EQ(d1.truncated(n), d2.truncated(n));
    }
}

TEST(Series, PrecisionOfProducts)
{
    // (1 + O(q^4)) * q^-2 is known only through q^2
    QTSeries a = QTSeries::constant(Rational(1), 0, 4);
    QTSeries b = QTSeries::monomial(-2, 0, Rational(1), 0);
    EXPECT_EQ((a * b).n_q(), 2);
    EXPECT_THROW((a * b).coeff(3, 0), HeadroomError);
}

TEST(Series, FirstMismatch)
{
    QTSeries a = QTSeries::constant(Rational(1), 2, 5);
    QTSeries b = a;
    EXPECT_FALSE(first_mismatch(a, b, 5));
    b.add_term(3, 1, Rational(2));
    b.add_term(1, 2, Rational(2));
    auto m = first_mismatch(a, b, 5);
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, std::make_pair(3, 1));
}
