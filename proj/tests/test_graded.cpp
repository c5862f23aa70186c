#include <gtest/gtest.h>

#include "curalg/graded/dsl.hpp"

using namespace curalg;

namespace {

SparseVec e(int i, int c = 1) { return SparseVec{{i, Rational(c)}}; }

int index_of(const GradedAlgebra& a, const std::string& label)
{
    auto i = a.find(label);
    if (!i) throw std::runtime_error("no basis element " + label);
    return *i;
}

SparseVec prod(const GradedAlgebra& a, const std::string& x, const std::string& y)
{
    return a.product(index_of(a, x), index_of(a, y));
}

// C[x, xi], x even weight 1, xi odd weight 2, d xi = x^2
GradedAlgebra koszul_example(int bound)
{
    return parse_algebra_spec("free x:even:w=1, xi:odd:w=2; d xi = x^2; window " + std::to_string(bound));
}

} // namespace

TEST(FreeAlgebra, BasisCounts)
{
    auto a = free_skew_algebra({{"x", 0, {1, 0}}, {"y", 0, {0, 1}}}, WeightWindow{{}, {3, 3}});
    EXPECT_EQ(a.size(), 16);
    auto b = free_skew_algebra({{"x", 0, {1}}, {"xi", 1, {1}}}, WeightWindow{{}, {4}});
    // x^a and x^a xi with total weight <= 4
    EXPECT_EQ(b.size(), 5 + 4);
    EXPECT_EQ(b.basis[b.unit].label, "1");
}

TEST(FreeAlgebra, KoszulSigns)
{
    auto a = free_skew_algebra({{"x", 1, {1}}, {"y", 1, {1}}}, WeightWindow{{}, {2}});
    EXPECT_EQ(prod(a, "x", "y"), e(index_of(a, "x*y")));
    EXPECT_EQ(prod(a, "y", "x"), e(index_of(a, "x*y"), -1));
    EXPECT_TRUE(prod(a, "x", "x").empty());
    EXPECT_TRUE(check_presentation(a).ok());
}

TEST(FreeAlgebra, ZeroWeightEvenGeneratorRejected)
{
    EXPECT_THROW(free_skew_algebra({{"x", 0, {0}}}, WeightWindow{{}, {3}}), Error);
}

TEST(FreeAlgebra, DifferentialSatisfiesAxioms)
{
    auto a = koszul_example(6);
    auto rep = check_presentation(a);
    EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.violations.front().detail);
    EXPECT_EQ(a.delta(index_of(a, "xi")), e(index_of(a, "x^2")));
    // d(x xi) = x^3
    EXPECT_EQ(a.delta(index_of(a, "x*xi")), e(index_of(a, "x^3")));
}

TEST(FreeAlgebra, OddDerivationSign)
{
    // u of degree 3 with d u = x*y; d(v u) = -v d(u) = -v*x*y = -x*y*v
    auto a = parse_algebra_spec("free x:odd:w=1, y:odd:w=1, v:odd:w=1, u:deg=3:w=2; d u = x*y; window 4");
    EXPECT_TRUE(check_presentation(a).ok());
    EXPECT_EQ(a.delta(index_of(a, "v*u")), e(index_of(a, "x*y*v"), -1));
    EXPECT_EQ(a.delta(index_of(a, "x*u")), SparseVec{});
}

TEST(Quotient, Products)
{
    auto a = quotient_truncated_poly(4);
    EXPECT_EQ(a.size(), 4);
    EXPECT_EQ(prod(a, "x", "x^2"), e(3));
    EXPECT_TRUE(prod(a, "x^2", "x^2").empty());
    EXPECT_FALSE(a.is_truncated(2, 2));
    EXPECT_TRUE(check_presentation(a).ok());
}

TEST(CrossingLines, Products)
{
    auto a = crossing_lines(3);
    EXPECT_EQ(a.size(), 7);
    EXPECT_TRUE(prod(a, "x", "y").empty());
    EXPECT_FALSE(a.is_truncated(index_of(a, "x"), index_of(a, "y")));
    EXPECT_EQ(prod(a, "x", "x^2"), e(index_of(a, "x^3")));
    EXPECT_TRUE(a.is_truncated(index_of(a, "x^2"), index_of(a, "x^2")));
    EXPECT_TRUE(check_presentation(a).ok());
}

TEST(Laurent, Products)
{
    auto a = laurent_window(2);
    EXPECT_EQ(a.size(), 5);
    EXPECT_EQ(prod(a, "x", "x^-1"), e(a.unit));
    EXPECT_EQ(prod(a, "x^2", "x^-1"), e(index_of(a, "x")));
    EXPECT_TRUE(a.is_truncated(index_of(a, "x^2"), index_of(a, "x")));
    EXPECT_TRUE(check_presentation(a).ok());
}

TEST(SquareZero, Products)
{
    auto a = square_zero_extension(3, 3);
    EXPECT_EQ(a.size(), 7);
    EXPECT_TRUE(prod(a, "x", "x^-1").empty());
    EXPECT_EQ(prod(a, "x", "x^-2"), e(index_of(a, "x^-1")));
    EXPECT_EQ(prod(a, "x^2", "x^-3"), e(index_of(a, "x^-1")));
    EXPECT_TRUE(prod(a, "x^-1", "x^-1").empty());
    EXPECT_EQ(a.basis[index_of(a, "x^-2")].weight, (std::vector<int>{-2, 1}));
    EXPECT_TRUE(check_presentation(a).ok());
    EXPECT_TRUE(check_module(quotient_truncated_poly(4), polar_module(3, 3)).ok());
}

TEST(Presentation, DetectsInjectedFaults)
{
    auto a = quotient_truncated_poly(4);
    auto bad = a;
    bad.set_product(1, 2, e(3, 2));
    auto rep = check_presentation(bad);
    ASSERT_FALSE(rep.ok());
    bool comm = false;
    for (const auto& v : rep.violations) comm = comm || v.kind == Violation::Kind::Commutativity;
    EXPECT_TRUE(comm);

    auto bad_weight = a;
    bad_weight.set_product(1, 1, e(3));
    bool weight = false;
    for (const auto& v : check_presentation(bad_weight).violations) weight = weight || v.kind == Violation::Kind::Weight;
    EXPECT_TRUE(weight);

    auto bad_unit = a;
    bad_unit.set_product(0, 1, e(1, 3));
    bool unit = false;
    for (const auto& v : check_presentation(bad_unit).violations) unit = unit || v.kind == Violation::Kind::Unit;
    EXPECT_TRUE(unit);

    auto k = koszul_example(4);
    auto bad_delta = k;
    bad_delta.set_delta(index_of(k, "x*xi"), e(index_of(k, "x^3"), 2));
    bool leibniz = false;
    for (const auto& v : check_presentation(bad_delta).violations)
        leibniz = leibniz || v.kind == Violation::Kind::Leibniz;
    EXPECT_TRUE(leibniz);
}

TEST(Presentation, DetectsNonAssociativity)
{
    auto a = quotient_truncated_poly(5);
    // x * x^2 = 2 x^3 while x^2 * x = 2 x^3 keeps commutativity but breaks (x x) x = x (x x)
    a.set_product(1, 2, e(3, 2));
    a.set_product(2, 1, e(3, 2));
    bool assoc = false;
    for (const auto& v : check_presentation(a).violations) assoc = assoc || v.kind == Violation::Kind::Associativity;
    EXPECT_TRUE(assoc);
}

TEST(Dsl, ConstructorsMatch)
{
    EXPECT_EQ(parse_algebra_spec("quot x^3"), quotient_truncated_poly(3));
    EXPECT_EQ(parse_algebra_spec("cross W=3"), crossing_lines(3));
    EXPECT_EQ(parse_algebra_spec("sqzero D+=3 D-=2"), square_zero_extension(3, 2));
    EXPECT_EQ(parse_algebra_spec("laurent D=2"), laurent_window(2));
    EXPECT_EQ(parse_algebra_spec("free x:w=1,0; y:w=0,1; window 3,3").size(), 16);
}

TEST(Dsl, RoundTrip)
{
    for (const std::string text :
         {"free x:even:w=1, xi:odd:w=2; d xi = x^2; window 6", "quot t^5", "cross", "cross W=4",
          "sqzero D+=4 D-=3", "laurent D=3", "free a:odd:w=1,2, b:deg=2:w=0,1; window 2,2",
          "free x:w=1, y:w=1, e:odd:w=2; d e = 3/2*x^2 - x*y + 2*y^2; window 4"}) {
        AlgebraSpec s = parse_spec_text(text);
        std::string printed = print_spec(s);
        EXPECT_EQ(parse_spec_text(printed), s) << text << " -> " << printed;
        EXPECT_EQ(print_spec(parse_spec_text(printed)), printed);
        auto a = build_algebra(s);
        EXPECT_EQ(parse_algebra_spec(a.spec_text), a) << text;
    }
}

TEST(Dsl, DefaultWindow)
{
    auto a = parse_algebra_spec("free x:w=1", 5);
    EXPECT_EQ(a.size(), 6);
}

TEST(Dsl, ErrorsCarryPositions)
{
    try {
        parse_spec_text("free x:w=1;\n d y = x");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.line(), 2);
        EXPECT_EQ(err.column(), 4);
    }
    try {
        parse_spec_text("free x:colour");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.column(), 8);
        EXPECT_TRUE(err.expected().count("odd"));
    }
    try {
        parse_spec_text("quot x 3");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.column(), 8);
        EXPECT_TRUE(err.expected().count("'^'"));
    }
    EXPECT_THROW(parse_spec_text(""), ParseError);
    EXPECT_THROW(parse_spec_text("free x, x"), ParseError);
    EXPECT_THROW(parse_spec_text("quot x^2; laurent D=1"), ParseError);
    EXPECT_THROW(parse_spec_text("free x # y"), ParseError);
}

TEST(Dsl, InhomogeneousDifferentialRejected)
{
    try {
        parse_algebra_spec("free x:w=1, xi:odd:w=2; d xi = x^3; window 6");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.column(), 27);
        EXPECT_NE(std::string(err.what()).find("weight"), std::string::npos);
    }
    EXPECT_THROW(parse_algebra_spec("free x:w=1, y:w=1; d y = x; window 3"), ParseError);
}
