#include <gtest/gtest.h>

#include <random>

#include "qmb/rational.hpp"
#include "qmb/scalar.hpp"

using qmb::NotDivisible;
using qmb::Rational;
using qmb::Scalar;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Scalar random_scalar(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Scalar s;
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
        s += Scalar::monomial(Rational(num(rng), den(rng)), exp(rng));
    }
    return s;
}

} // namespace

TEST(Rational, NormalizesSignAndGcd)
{
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowFallsBackToExactBigRationals)
{
    const Rational big(std::int64_t{1} << 62);
    const Rational sq = big * big;
    EXPECT_EQ(sq.to_mpq(), mpq_class(big.to_mpq() * big.to_mpq()));
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ((sq - sq), Rational(0));
    EXPECT_TRUE((sq - sq).is_zero());
}

TEST(Scalar, ArithmeticExamples)
{
    EXPECT_TRUE((Scalar::q() + -Scalar::q()).is_zero());
    EXPECT_TRUE((Scalar::q(-1) * Scalar::q()).is_one());
    EXPECT_EQ((S("1 - q^2") * S("1 + q^2")), S("1 - q^4"));
}

TEST(Scalar, BarExamples)
{
    EXPECT_EQ(qmb::bar(S("q^2")), S("q^-2"));
    EXPECT_EQ(qmb::bar(S("1 - q^2")), S("1 - q^-2"));
    EXPECT_EQ(qmb::bar(qmb::bar(S("3*q^3 - q^-1"))), S("3*q^3 - q^-1"));
}

TEST(Scalar, DivideExactExamples)
{
    EXPECT_EQ(qmb::divide_exact(S("1 - q^4"), S("1 - q^2")), S("1 + q^2"));
    EXPECT_EQ(qmb::divide_exact(S("q^3"), S("q")), S("q^2"));
    EXPECT_THROW(qmb::divide_exact(S("1 - q^3"), S("1 - q^2")), NotDivisible);
}

TEST(Scalar, EvalAtExamples)
{
    EXPECT_EQ(qmb::eval_at(S("1 - q^2"), Rational(1, 2)), Rational(3, 4));
    EXPECT_EQ(qmb::eval_at(S("q^-1"), Rational(1, 2)), Rational(2));
    EXPECT_EQ(qmb::eval_at(Scalar(), Rational(1, 3)), Rational(0));
}

TEST(Scalar, RenderingIsIncreasingInExponent)
{
    EXPECT_EQ(S("-q^4 + 1 + 3*q^-2").to_string(), "3*q^-2 + 1 - q^4");
    EXPECT_EQ(Scalar().to_string(), "0");
    EXPECT_EQ(S("-q").to_string(), "-q");
    EXPECT_EQ(S("1/2*q^-1").to_string(), "1/2*q^-1");
}

TEST(ScalarProperty, RingAxiomsAndRoundTrip)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Scalar a = random_scalar(rng);
        const Scalar b = random_scalar(rng);
        const Scalar c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(Scalar::parse(a.to_string()), a);
        EXPECT_EQ(qmb::bar(a * b), qmb::bar(a) * qmb::bar(b));
        if (!b.is_zero()) {
            EXPECT_EQ(qmb::divide_exact(a * b, b), a);
        }
        EXPECT_EQ(qmb::eval_at(a * b, Rational(2, 3)), qmb::eval_at(a, Rational(2, 3)) * qmb::eval_at(b, Rational(2, 3)));
    }
}
