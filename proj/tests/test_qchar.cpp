#include <gtest/gtest.h>

#include <random>

#include "curalg/qchar/identities.hpp"

using namespace curalg;
using namespace curalg::qchar;

namespace {

QTSeries one(int n_t, int n_q = QTSeries::kExact) { return QTSeries::constant(Rational(1), n_t, n_q); }

UFrac upoly(std::initializer_list<std::pair<int, int>> terms)
{
    ULaurent p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return UFrac(p);
}

} // namespace

TEST(Pochhammer, EmptyProduct)
{
    EXPECT_EQ(pochhammer(mono(0, 1, 2), 0, 3, 10), one(3));
}

TEST(Pochhammer, TwoFactors)
{
    const Monomial a = mono(1, 1, -2);
    QTSeries expected = (one(3) - to_series(a, 3)) * (one(3) - to_series(a * mono(1, 0, 0), 3));
    EXPECT_EQ(pochhammer(a, 2, 3, 10), expected);
}

TEST(Pochhammer, NegativeIndexIsReciprocal)
{
    const Monomial a = mono(2, 1, 2);
    QTSeries p = pochhammer(a, -1, 3, 8);
    QTSeries factor = one(3) - to_series(a * mono(-1, 0, 0), 3);
    EXPECT_EQ((p * factor).truncated(7), one(3, 7));
}

TEST(Pochhammer, InfiniteProductAgreesWithFinite)
{
    // (qt)_inf agrees with (qt)_N through q^N
    const int n = 6;
    QTSeries inf = pochhammer_inf(mono(1, 1, 0), 4, n);
    QTSeries fin = pochhammer(mono(1, 1, 0), n, 4, n).truncated(n);
    EXPECT_EQ(inf, fin);
}

TEST(Pochhammer, DegenerateDenominatorRejected)
{
    EXPECT_THROW(inverse_pochhammer_inf(mono(0, 0, 0), 2, 4), NotInvertibleError);
    EXPECT_THROW(pochhammer_inf(mono(-1, 0, 2), 2, 4), HeadroomError);
}

TEST(Weyl, Identity)
{
    QTSeries s = QTSeries::monomial(1, 1, upoly({{2, 1}, {-2, 3}}), 2);
    EXPECT_EQ(weyl_apply({0, 1}, s, 4), s);
}

TEST(Weyl, TranslationShiftsQ)
{
    QTSeries s = QTSeries::monomial(0, 0, upoly({{2, 1}}), 1);
    QTSeries expected = QTSeries::monomial(2, 0, upoly({{2, 1}}), 1);
    EXPECT_EQ(weyl_apply({1, 1}, s, 2), expected);
}

TEST(Weyl, ReflectionOfSymmetricInput)
{
    QTSeries s = QTSeries::monomial(0, 0, upoly({{2, 1}, {-2, 1}}), 1);
    EXPECT_EQ(weyl_apply({0, -1}, s, 2), s);
}

TEST(Weyl, GroupAction)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> n(-2, 2), sg(0, 1), c(-3, 3), e(-4, 4), q(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        QTSeries s(2);
        for (int k = 0; k < 5; ++k) s.add_term(q(rng), k % 3, upoly({{e(rng), c(rng)}}));
        WeylElement a{n(rng), sg(rng) ? 1 : -1}, b{n(rng), sg(rng) ? 1 : -1};
        EXPECT_EQ(weyl_apply(a, weyl_apply(b, s, 4), 4), weyl_apply(a * b, s, 4));
    }
}

TEST(Weyl, TranslationPrecision)
{
    QTSeries s = QTSeries::monomial(0, 0, upoly({{2, 1}}), 1, 10);
    EXPECT_EQ(weyl_apply({-2, 1}, s, 2).n_q(), 6);
    EXPECT_THROW(weyl_apply({1, 1}, QTSeries::monomial(0, 0, upoly({{6, 1}}), 1), 2), DimensionError);
}

TEST(Weyl, CocycleRelatesDenominatorToItsImage)
{
    // w(denominator) computed factor by factor equals c_w * denominator
    const int cap = 40;
    const int check = 10;
    for (int n = -2; n <= 2; ++n)
        for (int sign : {1, -1}) {
            WeylElement w{n, sign};
            QTSeries image = one(0, cap);
            auto push = [&](int k, int a) {
                // factor (1 - q^k u^a) becomes (1 - q^(k + n a) u^(sign a))
                int qk = k + n * a;
                if (qk <= cap) image = image * binomial(Monomial{}, mono(qk, 0, sign * a, -1), 0);
            };
            for (int k = 0; k <= cap; ++k) push(k, -2);
            for (int k = 1; k <= cap; ++k) push(k, 0);
            for (int k = 1; k <= cap; ++k) push(k, 2);
            ASSERT_GE(image.n_q(), check);
            QTSeries lhs = image.truncated(check);
            Monomial c = mono(0, 0, 0) / weyl_cocycle_inverse(w);
            QTSeries rhs = (to_series(c, 0) * weyl_denominator(0, cap)).truncated(check);
            EXPECT_FALSE(first_mismatch(lhs, rhs, check)) << "n=" << n << " sign=" << sign;
        }
}

TEST(ClosedForm, LowOrderCoefficients)
{
    const int n_q = 8;
    QTSeries r = closed_form_character(n_q, 3);
    EXPECT_TRUE(r.is_u_free());
    EXPECT_EQ(r.coeff(0, 0), UFrac(Rational(1)));
    for (int k = 1; k <= n_q; ++k) EXPECT_TRUE(r.coeff(k, 0).is_zero());
    for (int k = 0; k <= n_q; ++k) EXPECT_EQ(r.coeff(k, 1), UFrac(Rational(1))) << k;
    // t^2 q^1: +1 from the (qt) denominator, -1 from the (qt^2) numerator
    EXPECT_TRUE(r.coeff(1, 2).is_zero());
}

TEST(WeylSum, LowOrderCoefficients)
{
    QTSeries s = weyl_character_sum(3, 2, 4);
    EXPECT_EQ(s.coeff(0, 0), UFrac(Rational(1)));
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(s.coeff(k, 0).is_zero());
    EXPECT_EQ(s.coeff(0, 1), UFrac(Rational(1)));
}

TEST(WeylSum, UnstableWindowRejected)
{
    EXPECT_THROW(weyl_character_sum(6, 6, 1), StabilizationError);
}

TEST(WeylSum, AgreesWithClosedFormSmall)
{
    QTSeries s = weyl_character_sum(4, 3, 5);
    EXPECT_FALSE(first_mismatch(s, closed_form_character(4, 3), 4));
}

TEST(Bilateral, ZeroTermIsPrefactor)
{
    // with only n = 0 the sum is 1 and the result is the prefactor
    QTSeries t0 = curalg::qchar::detail::bilateral_term(0, 2, 5);
    EXPECT_EQ(t0, binomial(Monomial{}, mono(0, 0, 2, -1), 2).truncated(5));
}

TEST(Bilateral, AgreesWithClosedFormSmall)
{
    QTSeries s = bilateral_character_sum(4, 3, 5);
    EXPECT_FALSE(first_mismatch(s, closed_form_character(4, 3), 4));
}

TEST(FreeCharacter, NoGenerators)
{
    EXPECT_EQ(free_algebra_character({}, 5, 2), one(2, 5));
}

TEST(FreeCharacter, SingleEvenGenerator)
{
    // one generator of form degree 1, cohomological degree 1, weight 0: 1/(1 - t)
    QTSeries c = free_algebra_character({{1, 1, {0}}}, 3, 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(c.coeff(0, k), UFrac(Rational(1)));
    // cohomological degree 0 flips the sign: 1 - t
    QTSeries d = free_algebra_character({{1, 0, {0}}}, 3, 4);
    EXPECT_EQ(d.coeff(0, 1), UFrac(Rational(-1)));
    EXPECT_TRUE(d.coeff(0, 2).is_zero());
}

TEST(FreeCharacter, ConventionIsUnique)
{
    auto candidates = resolve_generator_convention(6, 4);
    int matches = 0;
    for (const auto& c : candidates)
        if (c.matches) {
            ++matches;
            EXPECT_EQ(c.form_degree, 2);
            EXPECT_EQ(c.coh_degree, 1);
            EXPECT_EQ(c.weight_offset, 1);
        }
    EXPECT_EQ(matches, 1);
}

TEST(BilateralSummation, QBinomialSpecialization)
{
    auto rep = bilateral_summation_check(mono(0, 0, 2), mono(1, 0, 0), mono(0, 1, 0), {8, 4}, 6);
    EXPECT_TRUE(rep.pass()) << rep.lhs.str() << "\n" << rep.rhs.str();
    EXPECT_EQ(rep.lhs.coeff(0, 0), UFrac(Rational(1)));
}

TEST(BilateralSummation, ReductionSubstitution)
{
    auto rep = bilateral_summation_check(mono(0, -1, 2), mono(1, 1, 2), mono(0, 1, 0), {8, 4}, 14);
    EXPECT_TRUE(rep.pass()) << rep.lhs.str() << "\n" << rep.rhs.str();
}
