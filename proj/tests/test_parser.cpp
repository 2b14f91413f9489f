#include <gtest/gtest.h>

#include <random>

#include "qmb/fock.hpp"
#include "qmb/parser.hpp"

using namespace qmb;

namespace {

NcPoly parse(const std::string& text) { return parse_expression(text, infer_kind(text)); }

} // namespace

TEST(Parser, Examples)
{
    EXPECT_EQ(parse("zs[1,1]*z[1,1]").to_string(), "q^2*z[1,1]*zs[1,1] + 1 - q^2");
    EXPECT_EQ(parse("z[1,1]").to_string(), "z[1,1]");
    EXPECT_EQ(parse("det_q(2)").to_string(), "z[1,1]*z[2,2] - q*z[1,2]*z[2,1]");
    EXPECT_EQ(parse("minor(1,2;1,2)"), det_z(AlgebraKind::pol(2)));
    EXPECT_EQ(parse("y(2)"), build_y(2, 2));
    EXPECT_EQ(parse("x(1)"), build_x(1, 1));
    EXPECT_EQ(parse("u(2,1)"), u_lambda(2, Partition({2, 1})).as_poly());
    EXPECT_EQ(parse("(1 - q^2)^2 - 1 + 2*q^2 - q^4").to_string(), "0");
    EXPECT_EQ(parse("q^-2*q^2").to_string(), "1");
    EXPECT_EQ(parse("(2*q)^-1"), algebra(AlgebraKind::pol(1))->scalar(Scalar::monomial(Rational(1, 2), -1)));
}

TEST(Parser, KindInference)
{
    EXPECT_EQ(infer_kind("z[1,1]"), AlgebraKind::pol(1));
    EXPECT_EQ(infer_kind("z[1,3]*zs[2,1]"), AlgebraKind::pol(3));
    EXPECT_EQ(infer_kind("t[1,4]"), AlgebraKind::mat2n(2));
    EXPECT_EQ(infer_kind("u(1,0,0)"), AlgebraKind::pol(3));
    EXPECT_EQ(infer_kind("z[1,1]", 3), AlgebraKind::pol(3));
}

TEST(Parser, ErrorsCarryPositions)
{
    try {
        parse("z[1,1]*+");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7U);
    }
    EXPECT_THROW(parse("z[1,1"), ParseError);
    EXPECT_THROW(parse("z[1,1]^-1"), ParseError);
    EXPECT_THROW(parse_expression("y(3)", AlgebraKind::pol(2)), ParseError);
    EXPECT_THROW(parse("x(1)*z[1,1]"), ParseError);
    EXPECT_THROW(parse_expression("z[3,1]", AlgebraKind::pol(2)), ParseError);
    EXPECT_THROW(parse("1/0"), ParseError);
    EXPECT_THROW(parse("w"), ParseError);
}

TEST(ParserProperty, RenderThenParseRoundTrips)
{
    std::mt19937_64 rng(41);
    for (const auto& kind : {AlgebraKind::pol(1), AlgebraKind::pol(2), AlgebraKind::mat2n(1), AlgebraKind::mat2n(2)}) {
        const auto alg = algebra(kind);
        for (int i = 0; i < 40; ++i) {
            const NcPoly f = alg->normal_form(random_combination(*alg, 3, 4, rng));
            EXPECT_EQ(parse_expression(f.to_string(), kind), f) << f.to_string();
        }
    }
}
